#include "rsrepair/serial.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rsrepair {

namespace {

constexpr int kFormatVersion = 1;

void require_version(const json& j) {
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != kFormatVersion)
        throw std::invalid_argument("serial: unsupported or missing format_version");
}

// The context field must structurally match the embedded descriptor; the
// loaded elements are then rebound into the context so pointer-identity
// checks keep working.
void require_field_match(const Field& ctx, const json& j) {
    if (j.at("p").get<unsigned>() != ctx.characteristic() ||
        j.at("d").get<unsigned>() != ctx.base_degree() ||
        j.at("ell").get<unsigned>() != ctx.ext_degree() ||
        j.at("modulus").get<std::vector<unsigned>>() != ctx.modulus())
        throw std::invalid_argument("serial: field mismatch");
}

json polys_to_json(const std::vector<EPoly>& polys) {
    json arr = json::array();
    for (const EPoly& g : polys) {
        json coeffs = json::array();
        for (const FieldElement& c : g.coeffs()) coeffs.push_back(element_to_json(c));
        arr.push_back(std::move(coeffs));
    }
    return arr;
}

std::vector<EPoly> polys_from_json(const Field& fld, const json& arr) {
    std::vector<EPoly> polys;
    for (const json& jp : arr) {
        std::vector<FieldElement> coeffs;
        for (const json& jc : jp) coeffs.push_back(element_from_json(fld, jc));
        polys.emplace_back(fld, std::move(coeffs));
    }
    return polys;
}

json words_to_json(const std::vector<Codeword>& rows) {
    json arr = json::array();
    for (const Codeword& row : rows) {
        json jr = json::array();
        for (const FieldElement& a : row) jr.push_back(element_to_json(a));
        arr.push_back(std::move(jr));
    }
    return arr;
}

std::vector<Codeword> words_from_json(const Field& fld, const json& arr) {
    std::vector<Codeword> rows;
    for (const json& jr : arr) {
        Codeword row;
        for (const json& ja : jr) row.push_back(element_from_json(fld, ja));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json field_to_json(const Field& fld) {
    json j;
    j["p"] = fld.characteristic();
    j["d"] = fld.base_degree();
    j["ell"] = fld.ext_degree();
    j["modulus"] = fld.modulus();
    return j;
}

std::shared_ptr<const Field> field_from_json(const json& j) {
    return make_field(j.at("p").get<unsigned>(), j.at("d").get<unsigned>(),
                      j.at("ell").get<unsigned>(),
                      j.at("modulus").get<std::vector<unsigned>>());
}

json element_to_json(const FieldElement& a) {
    return json(a.field().digits(a));
}

FieldElement element_from_json(const Field& fld, const json& j) {
    auto digits = j.get<std::vector<unsigned>>();
    return fld.from_digits(digits);
}

json code_to_json(const RsCode& code) {
    json j;
    j["format_version"] = kFormatVersion;
    j["field"] = field_to_json(code.field());
    json pts = json::array();
    for (const FieldElement& a : code.eval_points()) pts.push_back(element_to_json(a));
    j["eval_points"] = std::move(pts);
    j["k"] = code.dim();
    return j;
}

RsCode code_from_json(const json& j) {
    require_version(j);
    auto fld = field_from_json(j.at("field"));
    std::vector<FieldElement> pts;
    for (const json& jp : j.at("eval_points")) pts.push_back(element_from_json(*fld, jp));
    return RsCode(fld, std::move(pts), j.at("k").get<unsigned>());
}

json scheme_to_json(const RepairScheme& s) {
    json j;
    j["format_version"] = kFormatVersion;
    if (const RsCode* rs = std::get_if<RsCode>(&s.code())) {
        j["kind"] = "rs";
        j["code"] = code_to_json(*rs);
        j["target"] = s.target();
        if (!s.polys()) throw std::logic_error("serial: rs scheme lost its polynomials");
        j["polys"] = polys_to_json(*s.polys());
    } else {
        const LinearCode& lin = std::get<LinearCode>(s.code());
        j["kind"] = "linear";
        j["field"] = field_to_json(lin.field());
        j["n"] = lin.length();
        j["generator"] = words_to_json(lin.generator_rows());
        j["target"] = s.target();
        j["dual_words"] = words_to_json(s.words());
    }
    return j;
}

RepairScheme scheme_from_json(const json& j) {
    require_version(j);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rs") {
        RsCode code = code_from_json(j.at("code"));
        auto polys = polys_from_json(code.field(), j.at("polys"));
        return RepairScheme::for_rs(code, j.at("target").get<unsigned>(), std::move(polys));
    }
    if (kind == "linear") {
        auto fld = field_from_json(j.at("field"));
        LinearCode code(fld, words_from_json(*fld, j.at("generator")),
                        j.at("n").get<unsigned>());
        auto words = words_from_json(*fld, j.at("dual_words"));
        return RepairScheme::for_linear(std::move(code), j.at("target").get<unsigned>(),
                                        std::move(words));
    }
    throw std::invalid_argument("serial: unknown scheme kind");
}

json collection_to_json(const SchemeCollection& c) {
    json j;
    j["format_version"] = kFormatVersion;
    j["code"] = code_to_json(c.code());
    json arr = json::array();
    for (const RepairScheme& s : c.schemes) {
        json js;
        js["target"] = s.target();
        if (!s.polys()) throw std::logic_error("serial: rs scheme lost its polynomials");
        js["polys"] = polys_to_json(*s.polys());
        arr.push_back(std::move(js));
    }
    j["schemes"] = std::move(arr);
    return j;
}

SchemeCollection collection_from_json(const json& j) {
    require_version(j);
    RsCode code = code_from_json(j.at("code"));
    SchemeCollection out;
    for (const json& js : j.at("schemes")) {
        auto polys = polys_from_json(code.field(), js.at("polys"));
        out.schemes.push_back(
            RepairScheme::for_rs(code, js.at("target").get<unsigned>(), std::move(polys)));
    }
    return out;
}

json codeword_to_json(const Field& fld, const Codeword& w) {
    json j;
    j["format_version"] = kFormatVersion;
    j["field"] = field_to_json(fld);
    json arr = json::array();
    for (const FieldElement& a : w) arr.push_back(element_to_json(a));
    j["symbols"] = std::move(arr);
    return j;
}

Codeword codeword_from_json(const Field& fld, const json& j) {
    require_version(j);
    require_field_match(fld, j.at("field"));
    Codeword w;
    for (const json& ja : j.at("symbols")) w.push_back(element_from_json(fld, ja));
    return w;
}

json basis_to_json(const SubfieldBasis& b) {
    json j;
    j["format_version"] = kFormatVersion;
    j["field"] = field_to_json(b.field());
    json arr = json::array();
    for (const FieldElement& a : b.elems()) arr.push_back(element_to_json(a));
    j["elements"] = std::move(arr);
    return j;
}

SubfieldBasis basis_from_json(const Field& fld, const json& j) {
    require_version(j);
    require_field_match(fld, j.at("field"));
    std::vector<FieldElement> elems;
    for (const json& ja : j.at("elements")) elems.push_back(element_from_json(fld, ja));
    return SubfieldBasis(fld, std::move(elems));
}

json cost_to_json(const CostReport& r) {
    json j;
    j["format_version"] = kFormatVersion;
    j["target"] = r.target;
    json arr = json::array();
    for (const CostRow& row : r.helpers) {
        json jr;
        jr["helper"] = row.helper;
        jr["bandwidth"] = row.bandwidth;
        jr["reads"] = row.reads;
        jr["read_positions"] = row.read_positions;
        arr.push_back(std::move(jr));
    }
    j["helpers"] = std::move(arr);
    j["total_bandwidth"] = r.total_bandwidth;
    j["total_reads"] = r.total_reads;
    return j;
}

std::string cost_to_csv(const CostReport& r) {
    std::ostringstream os;
    os << "helper,bandwidth,reads,read_positions\n";
    for (const CostRow& row : r.helpers) {
        os << row.helper << ',' << row.bandwidth << ',' << row.reads << ',';
        for (std::size_t i = 0; i < row.read_positions.size(); ++i)
            os << (i ? ";" : "") << row.read_positions[i];
        os << '\n';
    }
    return os.str();
}

std::string cost_to_table(const CostReport& r) {
    std::ostringstream os;
    os << "repair of position " << r.target << "\n";
    os << std::setw(8) << "helper" << std::setw(11) << "bandwidth" << std::setw(7)
       << "reads" << "  positions\n";
    for (const CostRow& row : r.helpers) {
        std::ostringstream pos;
        for (std::size_t i = 0; i < row.read_positions.size(); ++i)
            pos << (i ? ";" : "") << row.read_positions[i];
        os << std::setw(8) << row.helper << std::setw(11) << row.bandwidth
           << std::setw(7) << row.reads << "  " << pos.str() << "\n";
    }
    os << std::setw(8) << "total" << std::setw(11) << r.total_bandwidth << std::setw(7)
       << r.total_reads << "\n";
    return os.str();
}

json report_to_json(const VerifyReport& r, long long wall_ms) {
    json j;
    j["format_version"] = kFormatVersion;
    j["check"] = r.check;
    j["exploratory"] = r.exploratory;
    json params = json::object();
    for (const auto& [key, val] : r.params) params[key] = val;
    j["parameters"] = std::move(params);
    json counts = json::object();
    for (const auto& [key, val] : r.counts) counts[key] = val;
    j["counts"] = std::move(counts);
    j["violations"] = r.violations;
    j["meta"] = json{{"wall_time_ms", wall_ms}};
    return j;
}

std::string report_to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "check: " << r.check << (r.exploratory ? " (exploratory)" : "") << "\n";
    os << "params:";
    for (const auto& [key, val] : r.params) os << ' ' << key << '=' << val;
    os << "\ncounts:\n";
    for (const auto& [key, val] : r.counts)
        os << "  " << key << " = " << val << "\n";
    if (r.violations.empty()) {
        os << "violations: none\n";
    } else {
        os << "violations:\n";
        for (const std::string& v : r.violations) os << "  - " << v << "\n";
    }
    os << "result: ";
    if (r.ok())
        os << "PASS\n";
    else
        os << "FAIL (" << r.violations.size() << " violation"
           << (r.violations.size() == 1 ? "" : "s") << ")\n";
    return os.str();
}

json transcript_to_json(const RepairTranscript& t) {
    json j;
    j["format_version"] = kFormatVersion;
    j["failed"] = t.failed;
    json arr = json::array();
    for (const TranscriptRow& row : t.rows) {
        json jr;
        jr["helper"] = row.helper;
        jr["read_positions"] = row.positions;
        jr["traces_sent"] = row.traces_sent;
        arr.push_back(std::move(jr));
    }
    j["helpers"] = std::move(arr);
    j["total_read"] = t.total_read;
    j["total_sent"] = t.total_sent;
    j["recovered"] = element_to_json(t.recovered);
    j["success"] = t.success;
    return j;
}

std::string transcript_to_text(const RepairTranscript& t) {
    std::ostringstream os;
    os << "failed position: " << t.failed << "\n";
    for (const TranscriptRow& row : t.rows) {
        os << "helper " << row.helper << ": read";
        if (row.positions.empty()) os << " nothing";
        for (std::size_t i = 0; i < row.positions.size(); ++i)
            os << (i ? ";" : " ") << row.positions[i];
        os << ", sent " << row.traces_sent << " trace"
           << (row.traces_sent == 1 ? "" : "s") << "\n";
    }
    os << "total read: " << t.total_read << "\n";
    os << "total sent: " << t.total_sent << "\n";
    os << "recovered:";
    for (unsigned dg : t.recovered.field().digits(t.recovered)) os << ' ' << dg;
    os << "\nsuccess: " << (t.success ? "yes" : "no") << "\n";
    return os.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace rsrepair
