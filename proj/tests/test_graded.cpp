#include "doctest.h"

#include "ainov/graded.hpp"
#include "ainov/models.hpp"
#include "ainov/rng.hpp"
#include "oracles.hpp"

using namespace ainov;

namespace {
const Rat E3(3);

ModulePtr small_module() {
    return std::make_shared<GradedModule>(
        std::vector<std::pair<std::string, int>>{{"x", 1}, {"y", 1}, {"z", 2}, {"w", 3}});
}
}  // namespace

TEST_SUITE("graded") {

TEST_CASE("module bookkeeping and label uniqueness") {
    auto M = small_module();
    CHECK(M->rank() == 4);
    CHECK(M->degree(M->id("z")) == 2);
    CHECK(M->labels_of_degree(1).size() == 2);
    CHECK_THROWS_AS(M->id("nope"), std::invalid_argument);
    CHECK_THROWS_AS(GradedModule({{"a", 0}, {"a", 1}}), std::invalid_argument);
}

TEST_CASE("insertion sign examples") {
    CHECK(insertion_sign({}, 1) == 1);
    CHECK(insertion_sign({1, 1}, 1) == 1);
    CHECK(insertion_sign({1, 1}, 2) == 1);          // (−1)^{1+1}
    CHECK(insertion_sign({2, 1, 1}, 3) == -1);      // (−1)^{2+1+2}
    CHECK_THROWS_AS(insertion_sign({1}, 3), std::out_of_range);
    CHECK_THROWS_AS(insertion_sign({1}, 0), std::out_of_range);
}

TEST_CASE("rotation sign examples") {
    CHECK(rotation_sign(1, {1, 1}) == 1);   // (−1)^{2·4}
    CHECK(rotation_sign(2, {1}) == 1);      // (−1)^{3·2}
    CHECK(rotation_sign(2, {2}) == -1);     // (−1)^{3·3}
}

TEST_CASE("sign functions agree with the exhaustive oracle") {
    std::vector<int> degree_pool{-2, -1, 0, 1, 2, 3};
    for (int len = 0; len <= 3; ++len) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
        while (true) {
            std::vector<int> degrees;
            for (auto i : idx) degrees.push_back(degree_pool[i]);
            for (int i = 1; i <= len + 1; ++i)
                CHECK(insertion_sign(degrees, i) == oracles::insertion_sign_oracle(degrees, i));
            for (int d0 : degree_pool)
                CHECK(rotation_sign(d0, degrees) == oracles::rotation_sign_oracle(d0, degrees));
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == degree_pool.size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
        if (len == 0) continue;
    }
}

TEST_CASE("sign multiplicativity under degree-list concatenation") {
    // Inserting after a concatenated prefix decomposes additively in the
    // exponent: sign(A ++ B, |A|+|B|+1) = sign(A,|A|+1)·sign(B,|B|+1)·(−1)^{…}
    // with the cross term equal to rotation of nothing; checked via the
    // additive exponent directly.
    std::vector<int> a{1, 2}, b{3, 1, 0};
    std::vector<int> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    long ea = 1 + 2 + 2;  // prefix a fully, i−1 = |a|
    long eb = 3 + 1 + 0 + 3;
    long eab = 1 + 2 + 3 + 1 + 0 + 5;
    CHECK(oracles::pow_minus_one(eab) ==
          oracles::pow_minus_one(ea) * oracles::pow_minus_one(eb));
    CHECK(insertion_sign(ab, static_cast<int>(ab.size()) + 1) ==
          insertion_sign(a, 3) * insertion_sign(b, 4));
}

TEST_CASE("element homogeneity and valuation") {
    auto M = small_module();
    Element e(M, E3);
    CHECK(e.is_homogeneous());
    CHECK(e.is_plus());
    e.add_term(M->id("x"), Nov::monomial(Rat(1), Rat(1, 2), 0, E3));
    CHECK(e.is_homogeneous());
    CHECK(e.degree() == 1);
    e.add_term(M->id("y"), Nov::constant(Rat(2), E3));
    CHECK(e.is_homogeneous());
    CHECK(!e.is_plus());
    e.add_term(M->id("z"), Nov::constant(Rat(1), E3));
    CHECK(!e.is_homogeneous());
    CHECK(e.valuation() == Rat(0));
}

TEST_CASE("zero coefficients are never stored") {
    auto M = small_module();
    Element e(M, E3);
    e.add_term(M->id("x"), Nov::constant(Rat(1), E3));
    e.add_term(M->id("x"), Nov::constant(Rat(-1), E3));
    CHECK(e.is_zero());
    CHECK(e.terms().empty());
}

TEST_CASE("multilinear map entry validation") {
    auto M = small_module();
    MultilinearMap m(M, 2, 0, E3);
    Element out(M, E3);
    out.add_term(M->id("z"), Nov::constant(Rat(1), E3));
    m.set_entry({M->id("x"), M->id("y")}, out);  // 1 + 1 + 0 = 2 ✓

    Element bad(M, E3);
    bad.add_term(M->id("w"), Nov::constant(Rat(1), E3));
    CHECK_THROWS_AS(m.set_entry({M->id("x"), M->id("y")}, bad), std::invalid_argument);
    CHECK_THROWS_AS(m.set_entry({M->id("x")}, out), std::invalid_argument);
}

TEST_CASE("apply: zero argument, arity zero, structure-constant lookup") {
    auto M = small_module();
    MultilinearMap m(M, 2, 0, E3);
    Element out(M, E3);
    out.add_term(M->id("z"), Nov::constant(Rat(1), E3));
    m.set_entry({M->id("x"), M->id("y")}, out);

    Element x = Element::basis(M, M->id("x"), E3);
    Element zero(M, E3);
    CHECK(m.apply({x, zero}).is_zero());

    MultilinearMap c(M, 0, 2, E3);
    c.set_entry({}, out);
    CHECK(c.apply({}) == out);

    CHECK(m.apply({x, Element::basis(M, M->id("y"), E3)}) == out);
    CHECK(m.apply({x, x}).is_zero());
    CHECK_THROWS_AS(m.apply({x}), std::invalid_argument);
}

TEST_CASE("apply: exact multilinearity in each slot") {
    auto M = small_module();
    MultilinearMap m(M, 2, 0, E3);
    Element zx(M, E3), zy(M, E3);
    zx.add_term(M->id("z"), Nov::constant(Rat(2), E3));
    zy.add_term(M->id("z"), Nov::constant(Rat(-3), E3));
    m.set_entry({M->id("x"), M->id("x")}, zx);
    m.set_entry({M->id("y"), M->id("x")}, zy);

    Rng rng(0xAB);
    for (int trial = 0; trial < 30; ++trial) {
        Rat a = rng.small_rational();
        Element x = Element::basis(M, M->id("x"), E3);
        Element y = Element::basis(M, M->id("y"), E3);
        Element combo = x.scaled(Nov::constant(a, E3)) + y;
        Element lhs = m.apply({combo, x});
        Element rhs = m.apply({x, x}).scaled(Nov::constant(a, E3)) + m.apply({y, x});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("apply: output degree bookkeeping on the wedge model") {
    Cutoffs cut(4, E3);
    auto table = models::exterior_algebra(4);
    // Build the multiplication map directly (no sign twist) just to check the
    // degree arithmetic of apply on a nontrivial sparse map.
    auto M = std::make_shared<GradedModule>(table.basis);
    MultilinearMap wedge(M, 2, 0, E3);
    for (const auto& [key, outs] : table.products) {
        Element out(M, E3);
        for (const auto& [label, c] : outs) out.add_term(M->id(label), Nov::constant(c, E3));
        wedge.set_entry({M->id(key.first), M->id(key.second)}, out);
    }
    Element e1 = Element::basis(M, M->id("e1"), E3);
    Element e2 = Element::basis(M, M->id("e2"), E3);
    Element product = wedge.apply({e1, e2});
    REQUIRE(!product.is_zero());
    CHECK(product.degree() == 2);
    CHECK(product == Element::basis(M, M->id("e12"), E3));
}

}  // TEST_SUITE
