#include <doctest.h>

#include "support/helpers.hpp"

using namespace solvquot;
using namespace solvquot::testing;

namespace {

const char* kScaling = "field Q\nvars x1 x2\ntorus t1\nmap x1 = t1*x1\nmap x2 = t1*x2\n";

struct TSetup {
    ActionSpec spec;
    TorusRestriction phi;
    Epoch epoch;

    explicit TSetup(const char* text)
        : spec(spec_from(text)), phi(spec, 0),
          epoch{make_denom(P(spec, "1")), Character::trivial(spec.m())} {}

    Localized val(const std::string& e) const { return L(spec.table, e, epoch.den); }
};

} // namespace

TEST_CASE("gm_degree") {
    TSetup s("field Q\nvars y x u\ntorus t1\nmap y = t1*y\nmap x = t1^2*x\nmap u = u\n");
    CHECK(gm_degree(s.phi, s.val("y"), s.epoch.weight) == 1);
    CHECK(gm_degree(s.phi, s.val("x"), s.epoch.weight) == 2);
    CHECK(gm_degree(s.phi, s.val("u"), s.epoch.weight) == 0);
    CHECK(gm_degree(s.phi, s.val("0"), s.epoch.weight) == 0);
}

TEST_CASE("torus_coeff_decompose") {
    TSetup s("field Q\nvars x y\ntorus t1\nmap x = t1^2*x\nmap y = t1*y\n");
    auto parts = torus_coeff_decompose(s.phi, s.val("x + y"), s.epoch.weight);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first[0] == 2);
    CHECK(parts[0].second.equals(s.val("x")));
    CHECK(parts[1].first[0] == 1);
    CHECK(parts[1].second.equals(s.val("y")));

    auto semi = torus_coeff_decompose(s.phi, s.val("x*y"), s.epoch.weight);
    REQUIRE(semi.size() == 1);
    CHECK(semi[0].first[0] == 3);

    auto triv = torus_coeff_decompose(s.phi, s.val("7"), s.epoch.weight);
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].first.is_trivial());

    // Weights compose under multiplication.
    auto wx = weight_of(P(s.spec, "x"), s.spec);
    auto wy = weight_of(P(s.spec, "y"), s.spec);
    auto wxy = weight_of(P(s.spec, "x*y"), s.spec);
    REQUIRE((wx && wy && wxy));
    CHECK(*wxy == *wx * *wy);
}

TEST_CASE("gm_slice on plain scaling") {
    TSetup s(kScaling);
    std::vector<Localized> gens{s.val("x1"), s.val("x2")};
    GmSlice slice = gm_slice(s.spec, 0, gens, s.epoch, nullptr);
    CHECK(*s.epoch.den == P(s.spec, "x1"));
    CHECK(slice.d == 1);
    CHECK(slice.weight[0] == -1);
    CHECK(slice.s.elem.equals(Localized(P(s.spec, "1"), 1, s.epoch.den)));
    CHECK((slice.s.elem * slice.s.inverse).is_one());
}

TEST_CASE("gm_slice with weight-2 action") {
    TSetup s("field Q\nvars x\ntorus t1\nmap x = t1^2*x\n");
    std::vector<Localized> gens{s.val("x")};
    GmSlice slice = gm_slice(s.spec, 0, gens, s.epoch, nullptr);
    CHECK(slice.d == 2);
    CHECK(slice.weight[0] == -2);
    CHECK(*s.epoch.den == P(s.spec, "x"));
    // All occurring exponents are multiples of 2 after the first pass, so the
    // loop body ran exactly once.
    CHECK(slice.s.elem.equals(Localized(P(s.spec, "1"), 1, s.epoch.den)));
}

TEST_CASE("gm_slice when the input is already sliced") {
    // Invertible generator of weight -1 is picked up without growing c.
    TSetup s(kScaling);
    DenomRef den = make_denom(P(s.spec, "x1"));
    s.epoch = Epoch{den, [] {
                        Character w(1);
                        w.set(0, 1);
                        return w;
                    }()};
    std::vector<Localized> gens{Localized::embed(P(s.spec, "x1"), den),
                                Localized::embed(P(s.spec, "x2"), den)};
    GmSlice slice = gm_slice(s.spec, 0, gens, s.epoch, nullptr);
    CHECK(*s.epoch.den == P(s.spec, "x1")); // no growth needed
    CHECK(slice.d == 1);
}

TEST_CASE("gm_slice trivial factor") {
    TSetup s("field Q\nvars x\ntorus t1\nmap x = x\n");
    std::vector<Localized> gens{s.val("x")};
    CHECK_THROWS_AS(gm_slice(s.spec, 0, gens, s.epoch, nullptr), TrivialActionError);
}

TEST_CASE("pi_gm") {
    TSetup s(kScaling);
    std::vector<Localized> gens{s.val("x1"), s.val("x2")};
    GmSlice slice = gm_slice(s.spec, 0, gens, s.epoch, nullptr);

    Localized x2 = Localized::embed(P(s.spec, "x2"), s.epoch.den);
    Localized img = pi_gm(s.spec, 0, slice, x2, s.epoch);
    CHECK(img.equals(Localized(P(s.spec, "x2"), 1, s.epoch.den))); // x2/x1

    CHECK(pi_gm(s.spec, 0, slice, slice.s.elem, s.epoch).is_one());

    Localized ratio(P(s.spec, "x2"), 1, s.epoch.den);
    CHECK(pi_gm(s.spec, 0, slice, ratio, s.epoch).equals(ratio));

    // pi is multiplicative and kills s - 1.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Localized a = Localized::embed(random_poly(rng, s.spec.table, s.spec.base_vars),
                                       s.epoch.den);
        Localized b = Localized::embed(random_poly(rng, s.spec.table, s.spec.base_vars),
                                       s.epoch.den);
        CHECK(pi_gm(s.spec, 0, slice, a * b, s.epoch)
                  .equals(pi_gm(s.spec, 0, slice, a, s.epoch) *
                          pi_gm(s.spec, 0, slice, b, s.epoch)));
    }
    Localized one = Localized::from_long(s.spec.table, 1, s.epoch.den);
    CHECK(pi_gm(s.spec, 0, slice, slice.s.elem - one, s.epoch).is_zero());
}

TEST_CASE("gm_slice definition conditions hold on exit") {
    TSetup s(kScaling);
    std::vector<Localized> gens{s.val("x1"), s.val("x2")};
    GmSlice slice = gm_slice(s.spec, 0, gens, s.epoch, nullptr);

    // (i) weight has t-exponent -d; (ii) the witness inverts; (iii) every
    // generator image lies in R_c[t^{+-d}].
    auto w = weight_of(slice.s.elem, s.spec, s.epoch.weight);
    REQUIRE(w);
    CHECK((*w)[0] == -slice.d);
    CHECK((slice.s.elem * slice.s.inverse).is_one());
    TorusRestriction phi(s.spec, 0);
    for (const auto& g : gens) {
        Localized im = phi.apply(g, s.epoch.weight);
        for (const auto& [m, c] : im.num().terms())
            CHECK(m[phi.tvar()] % slice.d == 0);
    }
}
