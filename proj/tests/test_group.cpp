#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glnconverse/decompositions.hpp"
#include "glnconverse/group.hpp"

using namespace glnc;

TEST_CASE("closed form orders") {
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(3, 2) == 168);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(4, 2) == 20160);
  CHECK(gl_order(3, 3) == 11232);
  CHECK(unitriangular_order(3, 2) == 8);
  CHECK(unitriangular_order(2, 3) == 3);
  CHECK(mirabolic_order(2, 3) == 6);
  CHECK(mirabolic_order(3, 2) == 24);
  CHECK(qgroup_order(2, 3) == 12);
  CHECK(qgroup_order(3, 2) == 24);
}

TEST_CASE("named matrices") {
  Field f = make_field(3, 1);
  // at n = 2 the cycle alpha equals the long Weyl element
  CHECK(alpha_power(2, 1) == w_long(2));
  CHECK(alpha_power(3, 0) == identity(3));
  // w_{3,1} = diag(1, w_2)
  Mat w31 = w_nr(3, 1);
  CHECK(w31.at(0, 0) == 1);
  CHECK(w31.at(1, 2) == 1);
  CHECK(w31.at(2, 1) == 1);
  CHECK(w31.at(1, 1) == 0);
  CHECK(w_nr(3, 0) == w_long(3));
  Mat d = d_alt(f, 3);
  CHECK(d.at(0, 0) == 1);
  CHECK(d.at(1, 1) == 2);
  CHECK(d.at(2, 2) == 1);
  Mat z = scalar_mat(f, 2, 2);
  CHECK(is_scalar(z));
  CHECK(!is_scalar(w_long(2)));
  CHECK(is_mirabolic(identity(3)));
  CHECK(!is_mirabolic(w_long(3)));
  CHECK(is_qsubgroup(z));
  CHECK(is_unitriangular(identity(4)));
  CHECK(is_upper_triangular(z));
}

TEST_CASE("matrix inverse and determinant") {
  Field f = make_field(3, 1);
  Mat a = identity(2);
  a.at(0, 1) = 2;
  CHECK(mat_det(f, a) == 1);
  Mat ai = mat_inv(f, a);
  CHECK(mat_mul(f, a, ai) == identity(2));
  CHECK(mat_det(f, w_long(2)) == f.minus_one());

  Mat s{};
  s.n = 2;  // zero matrix is singular
  CHECK(mat_det(f, s) == 0);
  CHECK_THROWS_AS(mat_inv(f, s), UsageError);

  // key roundtrip
  uint64_t key = mat_key(a, f.q());
  CHECK(mat_from_key(key, f.q(), 2) == a);
}

TEST_CASE("group context enumerates GL_2(F_3)") {
  Field f = make_field(3, 1);
  GroupContext ctx(f, 2);
  CHECK(ctx.size() == 48);
  CHECK(ctx.unipotent_order() == 3);
  CHECK(ctx.elem(ctx.identity()) == identity(2));

  // keys ascend, elements roundtrip
  for (long i = 1; i < ctx.size(); ++i) CHECK(ctx.key_of(i - 1) < ctx.key_of(i));
  for (long i = 0; i < ctx.size(); ++i) CHECK(ctx.index(ctx.elem(i)) == i);

  // multiplication matches matrix arithmetic, inverses invert
  for (long a = 0; a < ctx.size(); a += 7)
    for (long b = 0; b < ctx.size(); b += 5) {
      CHECK(ctx.elem(ctx.mul(a, b)) == mat_mul(f, ctx.elem(a), ctx.elem(b)));
      CHECK(ctx.mul(a, ctx.inv(a)) == ctx.identity());
    }

  Mat bad = identity(2);
  bad.at(0, 0) = 0;  // singular, not in the group
  CHECK(ctx.try_index(bad) == -1);
  CHECK_THROWS_AS(ctx.index(bad), UsageError);
}

TEST_CASE("psi exponent on the unitriangular group") {
  Field f = make_field(3, 1);
  GroupContext ctx(f, 2);
  Mat u = identity(2);
  u.at(0, 1) = 1;
  CHECK(ctx.psi_exponent(u) == 1);
  u.at(0, 1) = 2;
  CHECK(ctx.psi_exponent(u) == 2);
  CHECK(ctx.psi_exponent(ctx.identity()) == 0);
  CHECK_THROWS_AS(ctx.psi_exponent(w_long(2)), UsageError);

  // additivity over the whole group U for n = 3
  GroupContext c3(make_field(2, 1), 3);
  for (int32_t a : c3.unipotent())
    for (int32_t b : c3.unipotent()) {
      long lhs = c3.psi_exponent(c3.mul(a, b));
      long rhs = (c3.psi_exponent(long(a)) + c3.psi_exponent(long(b))) % 2;
      CHECK(lhs == rhs);
    }
}

TEST_CASE("psi cosets") {
  Field f = make_field(3, 1);
  GroupContext ctx(f, 2);
  CosetIndex ci = build_psi_cosets(ctx);
  CHECK(ci.size() == 16);  // |U\G| = 48/3
  CHECK(ci.cocycle[size_t(ctx.identity())] == 0);
  CHECK(ci.reps[size_t(ci.identity_coset)] == ctx.identity());
  // translating by u shifts the cocycle by psi(u)
  for (int32_t u : ctx.unipotent())
    for (long g = 0; g < ctx.size(); ++g) {
      long ug = ctx.mul(long(u), g);
      CHECK(ci.rep_of[size_t(ug)] == ci.rep_of[size_t(g)]);
      long expect = (ci.cocycle[size_t(g)] + ctx.psi_exponent(long(u))) % 3;
      CHECK(long(ci.cocycle[size_t(ug)]) == expect);
    }

  GroupContext c3(make_field(2, 1), 3);
  CosetIndex ci3 = build_psi_cosets(c3);
  CHECK(ci3.size() == 21);  // 168/8
}

TEST_CASE("height and cells") {
  GroupContext c3(make_field(2, 1), 3);
  CHECK(height(c3, c3.identity()) == 0);
  long a2 = c3.index(alpha_power(3, 2));
  CHECK(height(c3, a2) == 2);
  long a1 = c3.index(alpha_power(3, 1));
  CHECK(height(c3, a1) == 1);

  HeightReport hp = height_partition_check(c3);
  CHECK(hp.partition_ok);
  CHECK(hp.mismatches == 0);
  CHECK(hp.cell_sizes == std::vector<long>{24, 48, 96});

  GroupContext c2(make_field(3, 1), 2);
  HeightReport hp2 = height_partition_check(c2);
  CHECK(hp2.partition_ok);
  CHECK(hp2.cell_sizes == std::vector<long>{12, 36});

  CHECK(height_invariance_violations(c3, 500, 99) == 0);

  RefinedCoverReport cover = refined_cover_check(c3);
  CHECK(cover.half == 1);
  CHECK(cover.kmin == 2);
  CHECK(cover.uncovered == 0);
}
