#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rsrepair/basis.hpp"
#include "rsrepair/field.hpp"

using namespace rsrepair;

namespace {

// Trace by definition: a + a^q + ... + a^(q^(ell-1)), powers taken through
// pow() rather than the cached Frobenius chain.
FieldElement trace_by_powers(const Field& f, const FieldElement& a) {
    FieldElement acc = f.zero();
    std::uint64_t e = 1;
    for (unsigned i = 0; i < f.ext_degree(); ++i) {
        acc += a.pow(e);
        e *= f.subfield_order();
    }
    return acc;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("GF(4) matches its hand-computed tables") {
    auto f = make_field(2, 1, 2);
    CHECK(f->order() == 4);
    CHECK(f->subfield_order() == 2);
    CHECK(f->modulus() == std::vector<unsigned>{1, 1, 1});  // 1 + x + x^2
    CHECK(f->primitive().index() == 2);                     // x itself

    // Tr(0)=Tr(1)=0, Tr(x)=Tr(x+1)=1
    CHECK(f->trace_digit(f->element(0)) == 0);
    CHECK(f->trace_digit(f->element(1)) == 0);
    CHECK(f->trace_digit(f->element(2)) == 1);
    CHECK(f->trace_digit(f->element(3)) == 1);

    // x^2 = x + 1, x^3 = 1
    FieldElement x = f->element(2);
    CHECK((x * x).index() == 3);
    CHECK((x * x * x).index() == 1);
}

TEST_CASE("GF(8) and GF(9) trace tables match the power-sum definition") {
    for (auto [p, d, ell] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}}) {
        auto f = make_field(p, d, ell);
        for (std::uint32_t i = 0; i < f->order(); ++i) {
            FieldElement a = f->element(i);
            FieldElement t = trace_by_powers(*f, a);
            CHECK(f->trace(a) == t);
            CHECK(f->in_subfield(t));
            CHECK(f->subfield_rank(t) == f->trace_digit(a));
        }
    }
    auto f8 = make_field(2, 1, 3);
    CHECK(f8->modulus() == std::vector<unsigned>{1, 1, 0, 1});  // 1 + x + x^3
    CHECK(f8->trace_digit(f8->element(1)) == 1);
    CHECK(f8->trace_digit(f8->element(2)) == 0);  // x
    CHECK(f8->trace_digit(f8->element(4)) == 0);  // x^2
}

TEST_CASE("default moduli are irreducible: no roots, no small factors") {
    // Degree 2 or 3: irreducible iff root-free over GF(p).
    for (auto [p, d, ell] : {std::tuple{2u, 1u, 2u}, {2u, 1u, 3u}, {3u, 1u, 2u},
                             {5u, 1u, 2u}, {3u, 1u, 3u}}) {
        auto f = make_field(p, d, ell);
        const auto& mod = f->modulus();
        for (unsigned r = 0; r < p; ++r) {
            unsigned val = 0;
            for (std::size_t i = mod.size(); i-- > 0;) val = (val * r + mod[i]) % p;
            CHECK(val != 0);
        }
    }
    // Degree 4 over GF(2): also rule out the irreducible quadratic x^2+x+1.
    auto f16 = make_field(2, 2, 2);
    const auto& mod = f16->modulus();
    REQUIRE(mod.size() == 5);
    // Evaluate mod at the roots of x^2+x+1 working in GF(4).
    auto f4 = make_field(2, 1, 2);
    for (std::uint32_t i = 2; i <= 3; ++i) {
        FieldElement w = f4->element(i);
        FieldElement acc = f4->zero();
        for (std::size_t t = mod.size(); t-- > 0;) {
            acc = acc * w;
            if (mod[t]) acc += f4->one();
        }
        CHECK(acc != f4->zero());
    }
    for (unsigned r = 0; r < 2; ++r) {
        unsigned val = 0;
        for (std::size_t i = mod.size(); i-- > 0;) val = (val * r + mod[i]) % 2;
        CHECK(val != 0);
    }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, d, ell] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}}) {
        auto f = make_field(p, d, ell);
        std::uint32_t n = f->order();
        for (std::uint32_t i = 0; i < n; ++i) {
            FieldElement a = f->element(i);
            CHECK(a + f->zero() == a);
            CHECK(a * f->one() == a);
            CHECK(a - a == f->zero());
            if (i != 0) {
                CHECK(a * a.inverse() == f->one());
                CHECK(a.pow(n - 1) == f->one());
            }
            for (std::uint32_t j = 0; j < n; ++j) {
                FieldElement b = f->element(j);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (std::uint32_t k = 0; k < n; k += 3) {
                    FieldElement c = f->element(k);
                    CHECK((a + b) + c == a + (b + c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("primitive element has full multiplicative order") {
    for (auto [p, d, ell] : {std::tuple{2u, 1u, 2u}, {2u, 1u, 3u}, {3u, 1u, 2u},
                             {2u, 2u, 2u}, {3u, 2u, 2u}}) {
        auto f = make_field(p, d, ell);
        FieldElement xi = f->primitive();
        FieldElement acc = f->one();
        for (std::uint32_t e = 1; e + 1 < f->order(); ++e) {
            acc *= xi;
            CHECK(acc != f->one());
        }
        acc *= xi;
        CHECK(acc == f->one());
    }
    // GF(9) with modulus x^2+1: the variable has order 4, so the primitive
    // element must be x+1.
    auto f9 = make_field(3, 1, 2);
    CHECK(f9->modulus() == std::vector<unsigned>{1, 0, 1});
    CHECK(f9->digits(f9->primitive()) == std::vector<unsigned>{1, 1});
}

TEST_CASE("frobenius is the q-power map and fixes exactly the subfield") {
    for (auto [p, d, ell] : {std::tuple{2u, 1u, 3u}, {2u, 2u, 2u}, {3u, 1u, 2u}}) {
        auto f = make_field(p, d, ell);
        unsigned fixed = 0;
        for (std::uint32_t i = 0; i < f->order(); ++i) {
            FieldElement a = f->element(i);
            CHECK(a.frobenius() == a.pow(f->subfield_order()));
            if (a.frobenius() == a) {
                ++fixed;
                CHECK(f->in_subfield(a));
            } else {
                CHECK(!f->in_subfield(a));
            }
        }
        CHECK(fixed == f->subfield_order());
    }
}

TEST_CASE("subfield is closed and rank mapping is a bijection") {
    auto f = make_field(2, 2, 2);  // GF(16) over GF(4)
    auto sub = f->subfield_elements();
    REQUIRE(sub.size() == 4);
    for (const auto& a : sub)
        for (const auto& b : sub) {
            CHECK(f->in_subfield(a + b));
            CHECK(f->in_subfield(a * b));
        }
    std::set<std::uint32_t> seen;
    for (Digit r = 0; r < 4; ++r) {
        FieldElement a = f->subfield_element(r);
        CHECK(f->subfield_rank(a) == r);
        seen.insert(a.index());
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("subfield digit arithmetic agrees with element arithmetic") {
    for (auto [p, d, ell] : {std::tuple{2u, 2u, 2u}, {3u, 1u, 2u}}) {
        auto f = make_field(p, d, ell);
        unsigned q = f->subfield_order();
        for (Digit a = 0; a < q; ++a) {
            for (Digit b = 0; b < q; ++b) {
                FieldElement ea = f->subfield_element(a), eb = f->subfield_element(b);
                CHECK(f->subfield_element(f->fadd(a, b)) == ea + eb);
                CHECK(f->subfield_element(f->fmul(a, b)) == ea * eb);
                CHECK(f->subfield_element(f->fsub(a, b)) == ea - eb);
                if (b != 0) CHECK(f->subfield_element(f->fdiv(a, b)) == ea / eb);
            }
            CHECK(f->subfield_element(f->fneg(a)) == -f->subfield_element(a));
        }
    }
}

TEST_CASE("reference coordinates invert from_ref_coords everywhere") {
    for (auto [p, d, ell] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 2u}, {2u, 2u, 2u},
                             {3u, 2u, 2u}}) {
        auto f = make_field(p, d, ell);
        for (std::uint32_t i = 0; i < f->order(); ++i) {
            FieldElement a = f->element(i);
            FVec c = f->ref_coords(a);
            REQUIRE(c.size() == f->ext_degree());
            CHECK(f->from_ref_coords(c) == a);
            CHECK(f->ref_coords(i) == c);
            // coordinates really do expand over the reference basis
            FieldElement acc = f->zero();
            for (unsigned t = 0; t < f->ext_degree(); ++t)
                acc += f->subfield_element(c[t]) * f->reference_basis()[t];
            CHECK(acc == a);
        }
    }
}

TEST_CASE("digit round trips and element digit encoding") {
    auto f = make_field(2, 2, 2);
    for (std::uint32_t i = 0; i < f->order(); ++i) {
        auto dg = f->digits(f->element(i));
        CHECK(f->from_digits(dg) == f->element(i));
    }
    CHECK(f->from_digits(std::vector<unsigned>{1, 1, 0, 0}).index() == 3);
}

TEST_CASE("dual basis satisfies the trace-duality definition") {
    for (auto [p, d, ell] : {std::tuple{2u, 1u, 2u}, {2u, 1u, 3u}, {3u, 1u, 2u},
                             {2u, 2u, 2u}}) {
        auto f = make_field(p, d, ell);
        std::vector<SubfieldBasis> bases;
        bases.push_back(SubfieldBasis::standard(*f));
        if (f->order() == 8)
            bases.emplace_back(*f, std::vector<FieldElement>{f->element(2), f->element(4),
                                                             f->element(7)});
        if (f->order() == 4)
            bases.emplace_back(*f, std::vector<FieldElement>{f->element(2), f->element(3)});
        for (const auto& b : bases) {
            for (unsigned i = 0; i < f->ext_degree(); ++i)
                for (unsigned j = 0; j < f->ext_degree(); ++j) {
                    Digit t = f->trace_digit(b.elems()[i] * b.dual()[j]);
                    CHECK(t == (i == j ? 1 : 0));
                }
        }
    }
}

TEST_CASE("GF(4) standard dual basis is (x+1, 1)") {
    auto f = make_field(2, 1, 2);
    SubfieldBasis b = SubfieldBasis::standard(*f);
    CHECK(b.dual()[0].index() == 3);
    CHECK(b.dual()[1].index() == 1);
    // (x, x^2) is self-dual
    SubfieldBasis sd(*f, {f->element(2), f->element(3)});
    CHECK(sd.dual()[0] == sd.elems()[0]);
    CHECK(sd.dual()[1] == sd.elems()[1]);
}

TEST_CASE("coords, recovery from traces, and trace weights are consistent") {
    auto f = make_field(2, 1, 3);
    SubfieldBasis std_b = SubfieldBasis::standard(*f);
    SubfieldBasis other(*f, {f->element(3), f->element(5), f->element(1)});
    for (const SubfieldBasis* b : {&std_b, &other}) {
        for (std::uint32_t i = 0; i < f->order(); ++i) {
            FieldElement a = f->element(i);
            FVec c = b->coords(a);
            CHECK(b->from_coords(c) == a);
            FVec traces(f->ext_degree());
            for (unsigned t = 0; t < f->ext_degree(); ++t)
                traces[t] = f->trace_digit(b->elems()[t] * a);
            CHECK(b->recover_from_traces(traces) == a);
            // Tr(g a) = <trace_weights(g), coords(a)> for every g
            for (std::uint32_t gi = 0; gi < f->order(); ++gi) {
                FieldElement g = f->element(gi);
                FVec w = b->trace_weights(g);
                Digit dot = 0;
                for (unsigned t = 0; t < f->ext_degree(); ++t)
                    dot = f->fadd(dot, f->fmul(w[t], c[t]));
                CHECK(dot == f->trace_digit(g * a));
            }
        }
    }
}

TEST_CASE("every nonzero trace weight marks a coordinate that matters") {
    auto f = make_field(2, 1, 3);
    SubfieldBasis b = SubfieldBasis::standard(*f);
    for (std::uint32_t gi = 1; gi < f->order(); ++gi) {
        FieldElement g = f->element(gi);
        FVec w = b.trace_weights(g);
        for (unsigned pos = 0; pos < w.size(); ++pos) {
            if (w[pos] == 0) continue;
            // Two symbols differing only in coordinate pos get different traces.
            FVec c1(f->ext_degree(), 0), c2(f->ext_degree(), 0);
            c2[pos] = 1;
            CHECK(f->trace_digit(g * b.from_coords(c1)) !=
                  f->trace_digit(g * b.from_coords(c2)));
        }
    }
}

TEST_CASE("basis constructor rejects dependent tuples naming the culprit") {
    auto f = make_field(2, 1, 3);
    CHECK_THROWS_WITH_AS(
        SubfieldBasis(*f, {f->element(1), f->element(2), f->element(3)}),
        "basis: element 3 depends on the previous ones", std::invalid_argument);
    CHECK_THROWS_AS(SubfieldBasis(*f, {f->element(1), f->element(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SubfieldBasis(*f, {f->element(0), f->element(1), f->element(2)}),
                    std::invalid_argument);
}

TEST_CASE("field construction validates its inputs") {
    CHECK_THROWS_AS(Field(4, 1, 2), std::invalid_argument);   // p not prime
    CHECK_THROWS_AS(Field(2, 1, 21), std::invalid_argument);  // order cap
    CHECK_THROWS_AS(Field(2, 9, 1), std::invalid_argument);   // subfield cap (512)
    CHECK_THROWS_AS(Field(2, 1, 0), std::invalid_argument);
    // x^2 + 1 = (x+1)^2 over GF(2): reducible
    CHECK_THROWS_AS(Field(2, 1, 2, std::vector<unsigned>{1, 0, 1}),
                    std::invalid_argument);
    // wrong degree
    CHECK_THROWS_AS(Field(2, 1, 2, std::vector<unsigned>{1, 1}), std::invalid_argument);
    // not monic
    CHECK_THROWS_AS(Field(3, 1, 2, std::vector<unsigned>{1, 0, 2}),
                    std::invalid_argument);
    // alternative irreducible modulus accepted: x^2 + 2x + 2 over GF(3)
    auto f = make_field(3, 1, 2, std::vector<unsigned>{2, 2, 1});
    CHECK(f->order() == 9);
    FieldElement x = f->from_digits(std::vector<unsigned>{0, 1});
    CHECK(x * x + f->from_digits(std::vector<unsigned>{2}) * x == -f->from_digits(std::vector<unsigned>{2}));
}

TEST_CASE("cross-field operations are rejected") {
    auto f1 = make_field(2, 1, 2);
    auto f2 = make_field(2, 1, 2);
    CHECK_THROWS_AS((void)(f1->one() + f2->one()), std::logic_error);
    CHECK_THROWS_AS((void)(f1->one() == f2->one()), std::logic_error);
    CHECK_THROWS_AS((void)f1->trace(f2->one()), std::logic_error);
    CHECK(f1->element(3) == f1->element(3));
}

TEST_CASE("element index range is enforced") {
    auto f = make_field(2, 1, 2);
    CHECK_THROWS_AS((void)f->element(4), std::invalid_argument);
    CHECK_THROWS_AS((void)f->ref_coords(7), std::invalid_argument);
}

}  // TEST_SUITE
