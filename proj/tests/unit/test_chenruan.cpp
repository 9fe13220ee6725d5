#include <doctest.h>

#include "mckay/chen_ruan.hpp"
#include "mckay/toric_ring.hpp"
#include "support.hpp"

using namespace mckay;
using mckay::test::class_of;
using mckay::test::error_of;

TEST_SUITE("chenruan") {
  TEST_CASE("Betti tables") {
    CHECK(cr_betti(Weights{1, 3, 4, 4}).dims == std::vector<std::size_t>{1, 5, 5, 1});
    CHECK(cr_betti(Weights{1, 1, 2, 2}).dims == std::vector<std::size_t>{1, 2, 2, 1});
    for (long n = 2; n <= 7; ++n) CHECK(cr_betti(Weights::ones_then(n)).total() == static_cast<std::size_t>(2 * n));
    CHECK(error_of([] { (void)cr_betti(Weights{1, 2, 3, 4}); }) == ErrorCode::non_gorenstein);
    for (int dim = 1; dim <= 3; ++dim)
      for (const auto& w : enumerate_gorenstein(dim)) {
        const auto t = cr_betti(w);
        auto r = t.dims;
        std::reverse(r.begin(), r.end());
        CHECK(r == t.dims);
      }
  }

  TEST_CASE("P(1,3,4,4) ring") {
    const auto cr = cr_algebra(Weights{1, 3, 4, 4});
    CHECK(cr.algebra.labels ==
          std::vector<std::string>{"1", "H", "E1", "E2", "E3", "E4", "H^2", "H*E1", "H*E2", "H*E3", "E4^2", "H^3"});
    CHECK(cr.presentation.generators.size() == 14);
    const auto& q = cr.presentation;
    CHECK(cr_pairing(cr, class_of(q, "E1"), class_of(q, "H*E3")) == CycloNumber(Rational(1, 16)));
    CHECK(cr.algebra.integrate(class_of(q, "H^3")) == CycloNumber(Rational(1, 48)));
    CHECK(class_of(q, "E4^3") == class_of(q, "16*H^3"));
  }

  TEST_CASE("P(1,1,2,2) ring") {
    const auto cr = cr_algebra(Weights{1, 1, 2, 2});
    const auto& q = cr.presentation;
    CHECK(cr.algebra.multiply(class_of(q, "E"), class_of(q, "E")) == class_of(q, "H^2"));
    CHECK(cr_pairing(cr, class_of(q, "H"), class_of(q, "H^2")) == CycloNumber(Rational(1, 4)));
  }

  TEST_CASE("P(1,...,1,n) ring") {
    for (long n = 2; n <= 6; ++n) {
      const auto cr = cr_algebra(Weights::ones_then(n));
      const auto& q = cr.presentation;
      const std::string en = "E1^" + std::to_string(n), hn = "H^" + std::to_string(n);
      CHECK(class_of(q, en) == class_of(q, hn));
      CHECK(is_zero(class_of(q, "H*E1")));
      CHECK(cr.algebra.integrate(class_of(q, hn)) == CycloNumber(Rational(1, n)));
    }
  }

  TEST_CASE("pairing respects grading") {
    for (const auto& w : {Weights{1, 1, 2, 2}, Weights{1, 3, 4, 4}, Weights{1, 1, 1, 3}}) {
      const auto cr = cr_algebra(w);
      const auto& a = cr.algebra;
      const int top = a.top_degree();
      for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.degrees[i] < top) CHECK(cr_pairing(cr, a.basis_vector(a.unit), a.basis_vector(i)).is_zero());
        for (std::size_t j = 0; j < a.dim(); ++j)
          if (a.degrees[i] + a.degrees[j] != top) CHECK(cr_pairing(cr, a.basis_vector(i), a.basis_vector(j)).is_zero());
      }
      CHECK(rank(a.gram()) == a.dim());
    }
  }

  TEST_CASE("additive McKay correspondence") {
    std::vector<Weights> ws{Weights{1, 1, 2, 2}, Weights{1, 3, 4, 4}};
    for (long n = 2; n <= 6; ++n) ws.push_back(Weights::ones_then(n));
    for (const auto& w : ws) {
      const auto cr = cr_algebra(w);
      const auto tc = ToricCohomology::builtin(w);
      CHECK(cr.algebra.dim() == tc.algebra.dim());
      CHECK(cr.algebra.graded_dims() == tc.algebra.graded_dims());
    }
  }

  TEST_CASE("unsupported families and user presentations") {
    CHECK(error_of([] { (void)cr_algebra(Weights{1, 2, 3, 6}); }) == ErrorCode::unsupported_family);
    // hand-entered presentation equal to the built-in one
    CRPresentationInput in{{"H", "E"}, {2, 2}, {"H^2-E^2", "H^2*E"}, "H^3", Rational(1, 4)};
    const auto cr = cr_algebra(Weights{1, 1, 2, 2}, in);
    CHECK(cr.algebra.labels == cr_algebra(Weights{1, 1, 2, 2}).algebra.labels);
    // a presentation with the wrong Betti numbers is refused
    CRPresentationInput bad{{"H", "E"}, {2, 2}, {"H^2", "E^2"}, "H*E", Rational(1, 4)};
    CHECK(error_of([&] { (void)cr_algebra(Weights{1, 1, 2, 2}, bad); }) == ErrorCode::inconsistent_degree);
  }
}
