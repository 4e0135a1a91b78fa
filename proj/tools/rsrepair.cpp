#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsrepair/cluster.hpp"
#include "rsrepair/construct.hpp"
#include "rsrepair/search.hpp"
#include "rsrepair/serial.hpp"

using namespace rsrepair;

namespace {

// q = p^d for a prime p, or an error.
std::pair<unsigned, unsigned> factor_prime_power(unsigned q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    unsigned p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    unsigned d = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++d;
    }
    if (rest != 1) throw std::invalid_argument("q must be a prime power");
    return {p, d};
}

std::string digits_str(const std::vector<unsigned>& dg) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dg.size(); ++i) os << (i ? "," : "") << dg[i];
    os << ']';
    return os.str();
}

std::string element_str(const FieldElement& a) {
    return digits_str(a.field().digits(a));
}

std::string poly_str(const std::vector<unsigned>& dg) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < dg.size(); ++i) {
        if (dg[i] == 0) continue;
        if (any) os << " + ";
        if (i == 0 || dg[i] != 1) os << dg[i];
        if (i > 0 && dg[i] != 1) os << "*";
        if (i == 1) os << "x";
        if (i > 1) os << "x^" << i;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

struct FieldOpts {
    unsigned q = 2;
    unsigned ell = 2;
    std::vector<unsigned> modulus;

    std::shared_ptr<const Field> build() const {
        auto [p, d] = factor_prime_power(q);
        std::optional<std::vector<unsigned>> mod;
        if (!modulus.empty()) mod = modulus;
        return make_field(p, d, ell, mod);
    }
};

void add_field_opts(CLI::App* cmd, FieldOpts& fo) {
    cmd->add_option("--q", fo.q, "subfield order (prime power)")->capture_default_str();
    cmd->add_option("--ell", fo.ell, "extension degree over the subfield")
        ->capture_default_str();
    cmd->add_option("--modulus", fo.modulus,
                    "prime-field modulus coefficients, constant term first")
        ->delimiter(',');
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot write " + out_path);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2), out_path);
}

int emit_report(const VerifyReport& rep, long long wall_ms, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(rep, wall_ms).dump(2) << "\n";
    } else {
        std::cout << report_to_text(rep);
        std::cerr << "wall_time_ms: " << wall_ms << "\n";
    }
    return rep.ok() ? 0 : 1;
}

SubfieldBasis basis_for(const Field& fld, const std::string& spec) {
    if (spec == "default") return SubfieldBasis::standard(fld);
    return basis_from_json(fld, load_json_file(spec));
}

Codeword random_codeword(const RsCode& code, std::mt19937_64& rng) {
    const Field& fld = code.field();
    std::vector<FieldElement> coeffs;
    for (unsigned i = 0; i < code.dim(); ++i)
        coeffs.push_back(fld.element(static_cast<std::uint32_t>(rng() % fld.order())));
    return rs_encode(code, EPoly(fld, std::move(coeffs)));
}

int g_exit = 0;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"repair-scheme laboratory for full-length Reed-Solomon codes"};
    app.require_subcommand(1);

    // ---- field ----
    auto* field_cmd = app.add_subcommand("field", "construct and inspect fields");
    field_cmd->require_subcommand(1);
    {
        static FieldOpts fo;
        static std::string out;
        auto* build = field_cmd->add_subcommand("build", "emit a field descriptor");
        add_field_opts(build, fo);
        build->add_option("-o,--out", out, "output file (stdout when absent)");
        build->callback([] {
            auto f = fo.build();
            json j;
            j["format_version"] = 1;
            j["field"] = field_to_json(*f);
            j["order"] = f->order();
            j["primitive"] = f->digits(f->primitive());
            emit_json(j, out);
        });
    }
    {
        static FieldOpts fo;
        static std::string file;
        auto* show = field_cmd->add_subcommand("show", "print a field summary");
        add_field_opts(show, fo);
        show->add_option("--file", file, "field descriptor to load instead");
        show->callback([] {
            std::shared_ptr<const Field> f;
            if (!file.empty()) {
                json j = load_json_file(file);
                f = field_from_json(j.contains("field") ? j.at("field") : j);
            } else {
                f = fo.build();
            }
            std::cout << "GF(" << f->order() << "): p=" << f->characteristic()
                      << " d=" << f->base_degree() << " ell=" << f->ext_degree()
                      << ", subfield GF(" << f->subfield_order() << ")\n";
            std::cout << "modulus: " << poly_str(f->modulus()) << "\n";
            std::cout << "primitive: " << element_str(f->primitive()) << "\n";
            std::cout << "reference basis:";
            for (const auto& b : f->reference_basis()) std::cout << ' ' << element_str(b);
            std::cout << "\n";
            if (f->order() <= 64) {
                std::cout << "traces:";
                for (std::uint32_t i = 0; i < f->order(); ++i)
                    std::cout << ' ' << unsigned(f->trace_digit(f->element(i)));
                std::cout << "\n";
            }
        });
    }

    // ---- scheme ----
    auto* scheme_cmd = app.add_subcommand("scheme", "build and analyze repair schemes");
    scheme_cmd->require_subcommand(1);
    {
        static FieldOpts fo;
        static std::string construction = "iii", out;
        static unsigned m = 1, jstar = 1, k_naive = 0;
        static bool collection = false;
        static std::vector<std::uint32_t> wdims;
        auto* build = scheme_cmd->add_subcommand("build", "emit a scheme file");
        add_field_opts(build, fo);
        build->add_option("--construction", construction, "iii | naive")
            ->check(CLI::IsMember({"iii", "naive"}))
            ->capture_default_str();
        build->add_option("--m", m, "dimension of W; the code gets codimension q^m")
            ->capture_default_str();
        build->add_option("--w-dims", wdims,
                          "element indices spanning W (overrides --m)")
            ->delimiter(',');
        build->add_option("--jstar", jstar, "target position, 1-based")
            ->capture_default_str();
        build->add_option("--k", k_naive, "code dimension (naive only; default n-2)");
        build->add_flag("--collection", collection, "emit schemes for every position");
        build->add_option("-o,--out", out, "output file (stdout when absent)");
        build->callback([] {
            auto f = fo.build();
            unsigned n = f->order();
            if (construction == "iii") {
                Subspace w = Subspace::zero_subspace(*f);
                if (!wdims.empty()) {
                    std::vector<FieldElement> gens;
                    for (auto idx : wdims) gens.push_back(f->element(idx));
                    w = Subspace::span_of(*f, gens);
                    if (w.dim() != wdims.size())
                        throw std::invalid_argument("--w-dims elements are dependent");
                } else {
                    w = default_w(*f, m);
                }
                std::uint64_t r = 1;
                for (unsigned i = 0; i < w.dim(); ++i) r *= f->subfield_order();
                RsCode code = RsCode::full_length(f, n - static_cast<unsigned>(r));
                SubfieldBasis b = SubfieldBasis::standard(*f);
                if (collection) {
                    emit_json(collection_to_json(collection_of_schemes(code, w, b)), out);
                } else {
                    emit_json(scheme_to_json(subspace_poly_scheme(code, w, b, jstar)), out);
                }
            } else {
                unsigned k = k_naive ? k_naive : n - 2;
                RsCode code = RsCode::full_length(f, k);
                if (collection) {
                    SchemeCollection coll;
                    for (unsigned j = 1; j <= n; ++j)
                        coll.schemes.push_back(naive_scheme(code, j));
                    emit_json(collection_to_json(coll), out);
                } else {
                    emit_json(scheme_to_json(naive_scheme(code, jstar)), out);
                }
            }
        });
    }
    {
        static std::string scheme_file, basis_spec = "default", format = "table";
        auto* cost = scheme_cmd->add_subcommand("cost", "bandwidth and read accounting");
        cost->add_option("--scheme", scheme_file, "scheme file")->required();
        cost->add_option("--basis", basis_spec, "default | basis file")
            ->capture_default_str();
        cost->add_option("--format", format, "table | json | csv")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
        cost->callback([] {
            RepairScheme s = scheme_from_json(load_json_file(scheme_file));
            CostReport r = io_cost(s, basis_for(s.field(), basis_spec));
            if (format == "json")
                std::cout << cost_to_json(r).dump(2) << "\n";
            else if (format == "csv")
                std::cout << cost_to_csv(r);
            else
                std::cout << cost_to_table(r);
        });
    }
    {
        static std::string scheme_file;
        auto* check = scheme_cmd->add_subcommand("check", "report scheme properties");
        check->add_option("--scheme", scheme_file, "scheme or collection file")
            ->required();
        check->callback([] {
            json j = load_json_file(scheme_file);
            if (j.contains("schemes")) {
                SchemeCollection coll = collection_from_json(j);
                std::cout << "collection of " << coll.schemes.size() << " schemes on ["
                          << coll.code().length() << "," << coll.code().dim()
                          << "] over GF(" << coll.field().order() << ")\n";
                for (const RepairScheme& s : coll.schemes)
                    std::cout << "  target " << s.target() << ": valid, bandwidth "
                              << bandwidth(s) << ", rotational "
                              << (rotational_witness(s) ? "yes" : "no") << "\n";
                std::cout << "symmetric: " << (is_symmetric(coll) ? "yes" : "no") << "\n";
                return;
            }
            RepairScheme s = scheme_from_json(j);
            std::cout << "scheme on [" << s.length() << ","
                      << code_dim(s.code()) << "] over GF(" << s.field().order()
                      << "), target " << s.target() << "\n";
            std::cout << "valid: yes\n";
            std::cout << "bandwidth: " << bandwidth(s) << "\n";
            auto w = rotational_witness(s);
            if (w) {
                std::cout << "rotational: yes\n";
                std::cout << "  base subspace:";
                for (const auto& b : w->base.basis_elements())
                    std::cout << ' ' << element_str(b);
                std::cout << "\n";
                for (const auto& [helper, rho] : w->multipliers)
                    std::cout << "  helper " << helper << ": multiplier "
                              << element_str(rho) << "\n";
            } else {
                std::cout << "rotational: no\n";
            }
        });
    }

    // ---- repair ----
    auto* repair_cmd = app.add_subcommand("repair", "run repairs against a cluster");
    repair_cmd->require_subcommand(1);
    {
        static std::string scheme_file, codeword_file, basis_spec = "default",
                           format = "text";
        static unsigned random_n = 0;
        static std::uint64_t seed = 0;
        auto* run = repair_cmd->add_subcommand("run", "simulate repairs");
        run->add_option("--scheme", scheme_file, "scheme file")->required();
        run->add_option("--codeword", codeword_file, "codeword file");
        run->add_option("--random", random_n, "number of random codewords");
        run->add_option("--seed", seed, "random seed")->capture_default_str();
        run->add_option("--basis", basis_spec, "default | basis file (all nodes)")
            ->capture_default_str();
        run->add_option("--format", format, "text | json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        run->callback([] {
            RepairScheme s = scheme_from_json(load_json_file(scheme_file));
            const RsCode* rs = std::get_if<RsCode>(&s.code());
            if (!rs)
                throw std::invalid_argument("repair run needs a Reed-Solomon scheme");
            if (codeword_file.empty() == (random_n == 0))
                throw std::invalid_argument("pass exactly one of --codeword / --random");
            std::vector<Codeword> words;
            if (!codeword_file.empty()) {
                words.push_back(
                    codeword_from_json(rs->field(), load_json_file(codeword_file)));
            } else {
                std::mt19937_64 rng(seed);
                for (unsigned i = 0; i < random_n; ++i)
                    words.push_back(random_codeword(*rs, rng));
            }
            SubfieldBasis b = basis_for(rs->field(), basis_spec);
            std::vector<SubfieldBasis> bases(rs->length(), b);
            Cluster cl(*rs, bases);
            json arr = json::array();
            bool all_ok = true;
            for (const Codeword& w : words) {
                cl.load(w);
                RepairTranscript t = simulate_repair(cl, s);
                all_ok = all_ok && t.success;
                if (format == "json")
                    arr.push_back(transcript_to_json(t));
                else
                    std::cout << transcript_to_text(t) << "\n";
            }
            if (format == "json") std::cout << arr.dump(2) << "\n";
            if (!all_ok) g_exit = 1;
        });
    }

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a named exhaustive/analytic check");
    verify->require_subcommand(1);
    static unsigned vq = 2, vell = 2, vm = 1, vr = 2, vjstar = 1, vworkers = 1,
                    vbases = 5;
    static std::uint64_t vseed = 0;
    static std::string vformat = "text";
    auto add_verify = [&](const std::string& name, const std::string& desc,
                          std::vector<std::string> opts,
                          std::function<VerifyReport()> fn) {
        auto* cmd = verify->add_subcommand(name, desc);
        for (const std::string& o : opts) {
            if (o == "q") cmd->add_option("--q", vq, "subfield order")->capture_default_str();
            if (o == "ell")
                cmd->add_option("--ell", vell, "extension degree")->capture_default_str();
            if (o == "m")
                cmd->add_option("--m", vm, "dimension of W")->capture_default_str();
            if (o == "r")
                cmd->add_option("--r", vr, "code codimension")->capture_default_str();
            if (o == "jstar")
                cmd->add_option("--jstar", vjstar, "target position")->capture_default_str();
            if (o == "workers")
                cmd->add_option("--workers", vworkers, "scan threads")->capture_default_str();
            if (o == "bases")
                cmd->add_option("--bases", vbases, "random storage bases to test")
                    ->capture_default_str();
            if (o == "seed")
                cmd->add_option("--seed", vseed, "random seed")->capture_default_str();
        }
        cmd->add_option("--format", vformat, "text | json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->callback([fn] {
            auto t0 = std::chrono::steady_clock::now();
            VerifyReport rep = fn();
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            g_exit = emit_report(rep, ms, vformat);
        });
    };
    add_verify("thm1", "rotational schemes read the same total under every basis",
               {"q", "ell", "m", "bases", "seed"}, [] {
                   auto [p, d] = factor_prime_power(vq);
                   return check_rotational_io(p, d, vell, vm, vbases, vseed);
               });
    add_verify("thm2", "symmetric collection average reads equal k*ell",
               {"q", "ell", "m"}, [] {
                   auto [p, d] = factor_prime_power(vq);
                   return check_symmetric_average(p, d, vell, vm);
               });
    add_verify("thm3", "bandwidth-optimal classes at codimension 2 are rotational",
               {"q", "ell", "jstar", "workers"}, [] {
                   auto [p, d] = factor_prime_power(vq);
                   return check_optimal_classes(p, d, vell, vjstar, vworkers);
               });
    add_verify("lemma5", "trace-kernel intersections have codimension s",
               {"q", "ell"}, [] {
                   auto [p, d] = factor_prime_power(vq);
                   return check_kernel_intersections(p, d, vell);
               });
    add_verify("lemma6", "nonzero-trace indicator sums", {"q", "ell"}, [] {
        auto [p, d] = factor_prime_power(vq);
        return check_indicator_sums(p, d, vell);
    });
    add_verify("lemma7", "hyperplane multiplicity criterion matches the witness search",
               {"q", "ell", "r", "workers"}, [] {
                   auto [p, d] = factor_prime_power(vq);
                   return check_hyperplane_multiplicity(p, d, vell, vr, vworkers);
               });
    add_verify("lemma10", "bandwidth-optimal classes have uniform column dimensions",
               {"q", "ell", "m", "jstar", "workers"}, [] {
                   auto [p, d] = factor_prime_power(vq);
                   return check_optimal_column_dims(p, d, vell, vm, vjstar, vworkers);
               });
    add_verify("counterexample", "bandwidth-optimal MDS scheme that is not rotational",
               {}, [] { return check_counterexample(); });

    // ---- pareto ----
    {
        static FieldOpts fo;
        static unsigned r = 2, jstar = 1;
        static std::string format = "text";
        auto* pareto = app.add_subcommand("pareto", "bandwidth/reads front over classes");
        add_field_opts(pareto, fo);
        pareto->add_option("--r", r, "code codimension")->capture_default_str();
        pareto->add_option("--jstar", jstar, "target position")->capture_default_str();
        pareto->add_option("--format", format, "text | json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        pareto->callback([] {
            auto f = fo.build();
            RsCode code = RsCode::full_length(f, f->order() - r);
            auto front = pareto_front(code, jstar, SubfieldBasis::standard(*f));
            if (format == "json") {
                json arr = json::array();
                for (const ParetoPoint& pt : front) {
                    json jp;
                    jp["bandwidth"] = pt.bandwidth;
                    jp["reads"] = pt.reads;
                    jp["class_index"] = pt.class_index;
                    jp["polys"] = json::array();
                    for (const EPoly& g : pt.polys) {
                        json coeffs = json::array();
                        for (const FieldElement& c : g.coeffs())
                            coeffs.push_back(element_to_json(c));
                        jp["polys"].push_back(std::move(coeffs));
                    }
                    arr.push_back(std::move(jp));
                }
                json out;
                out["format_version"] = 1;
                out["front"] = std::move(arr);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "bandwidth  reads  class\n";
                for (const ParetoPoint& pt : front)
                    std::cout << std::setw(9) << pt.bandwidth << std::setw(7) << pt.reads
                              << std::setw(7) << pt.class_index << "\n";
            }
        });
    }

    // ---- avgio ----
    {
        static std::string coll_file, mode = "exact", format = "text";
        auto* avgio = app.add_subcommand("avgio", "average reads over a collection");
        avgio->add_option("--collection", coll_file, "collection file")->required();
        avgio->add_option("--mode", mode, "exact | heuristic")
            ->check(CLI::IsMember({"exact", "heuristic"}))
            ->capture_default_str();
        avgio->add_option("--format", format, "text | json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        avgio->callback([] {
            SchemeCollection coll = collection_from_json(load_json_file(coll_file));
            AverageIoResult res =
                mode == "exact" ? average_io_exact(coll) : average_io_heuristic(coll);
            if (format == "json") {
                json j;
                j["format_version"] = 1;
                j["mode"] = mode;
                j["exact"] = res.exact;
                j["ordered_bases"] = res.ordered_bases;
                j["per_node_reads"] = res.per_node_reads;
                j["average_num"] = res.average.num;
                j["average_den"] = res.average.den;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "mode: " << mode << "\n";
                std::cout << "ordered bases: " << res.ordered_bases << "\n";
                std::cout << "per-node reads:";
                for (unsigned v : res.per_node_reads) std::cout << ' ' << v;
                std::cout << "\naverage reads: " << res.average.num << "/"
                          << res.average.den << " = " << res.average.value() << "\n";
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
