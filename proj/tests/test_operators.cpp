#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arinf/operators.hpp"

#include <stdexcept>

using namespace arinf;

namespace {

void require_all_pass(const std::vector<RelationCheck>& checks) {
  REQUIRE(!checks.empty());
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CAPTURE(c.residual);
    CHECK(c.pass);
    CHECK(c.checked > 0);
  }
}

}  // namespace

TEST_CASE("full relation suite passes on every builtin datum") {
  const SampleSet samples = default_samples();
  for (const auto& name : builtin_names()) {
    const GradedSpace space(builtin_datum(name), Window{-3, 3, 7});
    const Sl2Structure sl2(&space);
    CAPTURE(name);
    for (const char* group : {"sl2", "weyl", "fn", "dualities"})
      require_all_pass(check_relations(sl2, group, samples));
  }
  const GradedSpace space(builtin_datum("elliptic_curve"), Window{-4, 4, 8});
  const Sl2Structure sl2(&space);
  for (const char* group : {"sl2", "weyl", "fn", "dualities"})
    require_all_pass(check_relations(sl2, group, default_samples()));
  CHECK_THROWS_AS(check_relations(sl2, "nonsense", default_samples()), std::invalid_argument);
}

TEST_CASE("growing the window never breaks a relation on the smaller interior") {
  // The interior masks only shrink claims; a pass at window W must persist
  // at every W' containing W because the checked identities are local.
  const SampleSet samples = default_samples();
  for (const Window w : {Window{-2, 2, 4}, Window{-3, 3, 6}, Window{-5, 5, 10}}) {
    const GradedSpace space(builtin_datum("abelian_surface"), w);
    const Sl2Structure sl2(&space);
    CAPTURE(w.rmax);
    for (const char* group : {"sl2", "weyl", "fn", "dualities"})
      require_all_pass(check_relations(sl2, group, samples));
  }
}

TEST_CASE("structural operators move the indices as documented") {
  const GradedSpace s(builtin_datum("elliptic_curve"), Window{-3, 3, 6});
  const Sl2Structure sl2(&s);
  const SparseOp N = monodromy_N(s);
  const SparseOp Phi = frobenius_Phi(s);
  const SparseOp L = lefschetz_L(s, sl2);
  const SparseOp C = weight_charC(s);

  for (int c = 0; c < s.dim(); ++c) {
    const GradedIndex& b = s.basis()[static_cast<std::size_t>(c)];
    for (const auto& [row, v] : N.column(c)) {
      const GradedIndex& t = s.basis()[static_cast<std::size_t>(row)];
      CHECK(t.p == b.p);
      CHECK(t.q == b.q);
      CHECK(t.r == b.r + 1);
      CHECK(t.k == b.k + 1);
      CHECK(v.re == 1);
      CHECK(v.im == 0);
    }
    for (const auto& [row, v] : Phi.column(c)) {
      CHECK(row == c);
      CHECK(v.re == -b.r);
    }
    for (const auto& [row, v] : L.column(c)) {
      const GradedIndex& t = s.basis()[static_cast<std::size_t>(row)];
      CHECK(t.p == b.p + 1);
      CHECK(t.q == b.q + 1);
      CHECK(t.r == b.r - 1);
      CHECK(t.k == b.k);
    }
    for (const auto& [row, v] : C.column(c)) {
      CHECK(row == c);
      CHECK(v == i_pow(b.p - b.q));
    }
  }
  // N annihilates exactly the layer-0 elements inside the window body
  for (int c = 0; c < s.dim(); ++c) {
    const GradedIndex& b = s.basis()[static_cast<std::size_t>(c)];
    const int layer = b.k - 2 * b.r - b.p - b.q;
    if (!s.window().contains(b.r + 1, b.k + 1)) continue;
    CHECK(N.column_is_zero(c) == (layer == 0));
  }
}

TEST_CASE("hbar duality is a partial permutation with flagged escapes") {
  const GradedSpace s(builtin_datum("elliptic_curve"), Window{-2, 2, 4});
  const PartialOperator S = duality_S(s);
  const auto mask = s_closed_mask(s);
  long kept = 0;
  for (int c = 0; c < s.dim(); ++c) {
    const GradedIndex& b = s.basis()[static_cast<std::size_t>(c)];
    const auto [rp, kp] = s_reflection(b.p + b.q, b.r, b.k);
    if (!mask[static_cast<std::size_t>(c)]) {
      CHECK(S.op.column_is_zero(c));
      continue;
    }
    ++kept;
    const auto& col = S.op.column(c);
    REQUIRE(col.size() == 1);
    const GradedIndex& t = s.basis()[static_cast<std::size_t>(col[0].first)];
    CHECK(t.p == b.p);
    CHECK(t.q == b.q);
    CHECK(t.r == rp);
    CHECK(t.k == kp);
    CHECK(!col[0].second.is_zero());
  }
  CHECK(kept + static_cast<long>(S.escaped.size()) == s.dim());
  for (const GradedIndex& e : S.escaped) {
    const auto [rp, kp] = s_reflection(e.p + e.q, e.r, e.k);
    CHECK(!s.window().contains(rp, kp));
  }
  CHECK(!S.total());  // this window leaks
}

TEST_CASE("representation elements satisfy the group laws pointwise") {
  const GradedSpace s(builtin_datum("p1"), Window{-3, 3, 6});
  const Sl2Structure sl2(&s);
  const SparseOp id = SparseOp::identity(&s);
  for (const Side side : {Side::L, Side::R}) {
    CHECK(rep_char(sl2, side, Rat(1)) == id);
    CHECK(rep_unipotent(sl2, side, Rat(0)) == id);
    CHECK(rep_char(sl2, side, Rat(2)).compose(rep_char(sl2, side, Rat(3))) ==
          rep_char(sl2, side, Rat(6)));
    CHECK(rep_unipotent(sl2, side, Rat(1, 2)).compose(rep_unipotent(sl2, side, Rat(1, 3))) ==
          rep_unipotent(sl2, side, Rat(5, 6)));
    // chi(lambda) is invertible with chi(1/lambda)
    CHECK(rep_char(sl2, side, Rat(5)).compose(rep_char(sl2, side, Rat(1, 5))) == id);
  }
}

TEST_CASE("lefschetz adjoint transposes the raising move") {
  const GradedSpace s(builtin_datum("k3"), Window{-2, 2, 4});
  const Sl2Structure sl2(&s);
  const SparseOp L = lefschetz_L(s, sl2);
  const SparseOp Ls = lefschetz_adjoint(L);
  for (int c = 0; c < s.dim(); ++c)
    for (const auto& [row, v] : Ls.column(c)) {
      const GradedIndex& b = s.basis()[static_cast<std::size_t>(c)];
      const GradedIndex& t = s.basis()[static_cast<std::size_t>(row)];
      CHECK(t.p == b.p - 1);
      CHECK(t.q == b.q - 1);
      CHECK(t.r == b.r + 1);
      // entry of the adjoint is the conjugated entry of L at the swap
      bool found = false;
      for (const auto& [r2, v2] : L.column(row))
        if (r2 == c) {
          found = true;
          CHECK(v == v2.conj());
        }
      CHECK(found);
    }
  CHECK(lefschetz_adjoint(Ls) == L);
}

TEST_CASE("kernel/cokernel pairing along S holds on the default window") {
  for (const auto& name : builtin_names()) {
    const GradedSpace s(builtin_datum(name), Window{-6, 6, 12});
    const ConeReport r = cone_duality_check(s);
    CAPTURE(name);
    CHECK(r.pass);
    CHECK(r.inconclusive == 0);
    CHECK(r.kernel_free_below);
    CHECK(r.vanishing_checked > 0);
    for (const auto& pair : r.pairs) {
      CHECK(pair.conclusive);
      CHECK(pair.pass);
      CHECK(pair.ker_dim == pair.coker_dim);
    }
  }
}

TEST_CASE("pairing report hand values on the shipped curves") {
  const GradedSpace ec(builtin_datum("elliptic_curve"), Window{-6, 6, 12});
  const ConeReport rec = cone_duality_check(ec);
  long weight1_dim = 0;
  for (const auto& pair : rec.pairs)
    if (pair.p + pair.q == 1 && pair.r == 0) weight1_dim += pair.ker_dim;
  CHECK(weight1_dim == 2);  // h^{1,0} + h^{0,1}

  const GradedSpace pt(builtin_datum("point"), Window{-6, 6, 12});
  const ConeReport rpt = cone_duality_check(pt);
  bool found = false;
  for (const auto& pair : rpt.pairs)
    if (pair.r == 1) {
      found = true;
      CHECK(pair.ker_dim == 1);
      CHECK(pair.coker_dim == 1);
      CHECK(pair.pass);
    }
  CHECK(found);
}

TEST_CASE("a window too small to realize the pairing reports inconclusive") {
  const GradedSpace s(builtin_datum("k3"), Window{-1, 1, 2});
  const ConeReport r = cone_duality_check(s);
  CHECK(r.inconclusive > 0);
  CHECK(!r.pass);  // never a silent pass on partial evidence
}

TEST_CASE("weil-deligne flow at several times") {
  const GradedSpace s(builtin_datum("elliptic_curve"), Window{-3, 3, 6});
  const Sl2Structure sl2(&s);
  require_all_pass(check_fn_relation(sl2, {0.5, 1.0, -2.0, 3.25}));
}
