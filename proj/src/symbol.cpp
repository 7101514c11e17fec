#include "g2eds/symbol.hpp"

namespace g2eds {

namespace {

MatQ table_to_matq(const std::vector<Scalar>& t, int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = t[static_cast<std::size_t>(i) * n + j].rat();
  return m;
}

std::vector<mpq_class> mat_apply(const MatQ& m, const std::vector<mpq_class>& x) {
  return m.multiply(x);
}

}  // namespace

std::vector<mpq_class> dense_form(const AltForm& a) {
  const auto& masks = masks_of_degree(a.degree());
  std::vector<mpq_class> v(masks.size(), mpq_class(0));
  for (const auto& [m, c] : a.terms()) v[mask_index(m)] = c.rat();
  return v;
}

AltForm form_from_dense(const std::vector<mpq_class>& v, int degree) {
  const auto& masks = masks_of_degree(degree);
  AltForm a(degree);
  for (std::size_t i = 0; i < masks.size(); ++i)
    if (sgn(v[i]) != 0) a.set(masks[i], Scalar::rational(v[i]));
  return a;
}

SolitonEds::SolitonEds(FiberPoint fp, mpq_class lambda)
    : fp_(std::move(fp)), lambda_(std::move(lambda)), duals_(35) {
  if (!fp_.base.ring_one().is_exact())
    throw ModeError("SolitonEds: symbol systems are exact-mode only");
  s_vec_ = dense_form(fp_.base.three_form());
  b_vec_ = dense_form(fp_.b);
}

const MatQ& SolitonEds::star_table(int degree) const {
  if (!star_[degree]) {
    int n = binomial(7, degree);
    star_[degree] = table_to_matq(fp_.base.star_table(degree), n);
  }
  return *star_[degree];
}

const G2PointDual& SolitonEds::dual_point(int dir3) const {
  if (!duals_[dir3]) {
    AltFormT<DualScalar> sdual(3);
    const auto& masks = masks_of_degree(3);
    for (const auto& [m, c] : fp_.base.three_form().terms())
      sdual.set(m, DualScalar{c, Scalar()});
    Mask dm = masks[dir3];
    DualScalar cur = sdual.terms().contains(dm) ? sdual.terms().at(dm)
                                                : DualScalar{Scalar(), Scalar()};
    cur.der += Scalar::integer(1);
    sdual.set(dm, cur);
    duals_[dir3] = G2PointDual::from_three_form(sdual);
  }
  return *duals_[dir3];
}

const MatQ& SolitonEds::star_table_derivative(int degree, int dir3) const {
  auto& slot = dstar_[degree];
  if (slot.empty()) slot.resize(35);
  if (!slot[dir3]) {
    const int n = binomial(7, degree);
    const auto& dual_table = dual_point(dir3).star_table(degree);
    MatQ d(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d(i, j) = dual_table[static_cast<std::size_t>(i) * n + j].der.rat();
    slot[dir3] = std::move(d);
  }
  return *slot[dir3];
}

void SolitonEds::build_generator(std::vector<GeneratorSymbol>& out,
                                 const SymbolOptions& opts) const {
  const AltForm& s = fp_.base.three_form();
  const AltForm& b = fp_.b;
  const G2Point& p = fp_.base;

  if (opts.gradient) {
    // d of z = ∗s(b ∧ ∗s s); 2-form rows, no torsion
    GeneratorSymbol g;
    g.name = "closure-of-dual-1-form";
    g.degree = 2;
    g.nu = MatQ(7, 56);
    g.torsion = AltForm(2);
    AltForm t = p.star(s);  // 4-form
    std::vector<mpq_class> w6 = dense_form(wedge(b, t));
    for (int f = 0; f < 35; ++f) {
      std::vector<mpq_class> dt3 = mat_apply(star_table_derivative(3, f), s_vec_);
      {
        const MatQ& s3 = star_table(3);
        for (int i = 0; i < 35; ++i) dt3[i] += s3(i, f);
      }
      AltForm dt_form = form_from_dense(dt3, 4);  // D(∗s s)[e_f]
      std::vector<mpq_class> col =
          mat_apply(star_table_derivative(6, f), w6);
      std::vector<mpq_class> w6d = dense_form(wedge(b, dt_form));
      std::vector<mpq_class> s6w = mat_apply(star_table(6), w6d);
      for (int r = 0; r < 7; ++r) g.nu(r, f) = col[r] + s6w[r];
    }
    for (int j = 0; j < 21; ++j) {
      AltForm e2(2);
      e2.set(masks_of_degree(2)[j], Scalar::integer(1));
      std::vector<mpq_class> col = mat_apply(star_table(6), dense_form(wedge(e2, t)));
      for (int r = 0; r < 7; ++r) g.nu(r, 35 + j) = col[r];
    }
    out.push_back(std::move(g));
  }

  if (opts.closure_of_b) {
    GeneratorSymbol g;
    g.name = "closure-of-b";
    g.degree = 3;
    g.nu = MatQ(21, 56);
    for (int j = 0; j < 21; ++j) g.nu(j, 35 + j) = 1;
    g.torsion = opts.include_torsion ? s * Scalar::rational(-lambda_) : AltForm(3);
    out.push_back(std::move(g));
  }

  if (opts.closure_of_s) {
    GeneratorSymbol g;
    g.name = "closure-of-s";
    g.degree = 4;
    g.nu = MatQ(35, 56);
    for (int f = 0; f < 35; ++f) g.nu(f, f) = 1;
    g.torsion = AltForm(4);
    out.push_back(std::move(g));
  }

  if (opts.costar_s) {
    GeneratorSymbol g;
    g.name = "closure-of-costar-s";
    g.degree = 5;
    g.nu = MatQ(35, 56);
    const MatQ& s3 = star_table(3);
    for (int f = 0; f < 35; ++f) {
      std::vector<mpq_class> col = mat_apply(star_table_derivative(3, f), s_vec_);
      for (int i = 0; i < 35; ++i) col[i] += s3(i, f);  // product rule: ∗(ds)[e_f]
      for (int r = 0; r < 35; ++r) g.nu(r, f) = col[r];
    }
    g.torsion = opts.include_torsion
                    ? (p.star(b) * 2 - wedge(b, s)) / 3
                    : AltForm(5);
    out.push_back(std::move(g));
  }

  if (opts.costar_b) {
    GeneratorSymbol g;
    g.name = "closure-of-costar-b";
    g.degree = 6;
    g.nu = MatQ(21, 56);
    for (int f = 0; f < 35; ++f) {
      std::vector<mpq_class> col = mat_apply(star_table_derivative(2, f), b_vec_);
      for (int r = 0; r < 21; ++r) g.nu(r, f) = col[r];
    }
    const MatQ& s2 = star_table(2);
    for (int j = 0; j < 21; ++j)
      for (int r = 0; r < 21; ++r) g.nu(r, 35 + j) = s2(r, j);
    g.torsion = AltForm(6);
    out.push_back(std::move(g));
  }

  if (opts.harmonic) {
    for (int i = 0; i < 7; ++i) {
      GeneratorSymbol g;
      g.name = "harmonic-coordinate-" + std::to_string(i + 1);
      g.degree = 7;
      g.nu = MatQ(7, 56);  // rows indexed by 6-masks
      for (int f = 0; f < 35; ++f) {
        const MatQ& d1 = star_table_derivative(1, f);
        for (int a = 0; a < 7; ++a) g.nu(a, f) = d1(a, i);
      }
      g.torsion = AltForm(7);
      out.push_back(std::move(g));
    }
  }
}

SymbolSystem SolitonEds::system(const SymbolOptions& opts) const {
  return system_restricted(opts, MatQ::identity(56, mpq_class(1)));
}

SymbolSystem SolitonEds::system_restricted(const SymbolOptions& opts,
                                           const MatQ& fiber_basis) const {
  SymbolSystem sys;
  sys.lambda = lambda_;
  sys.fiber_basis = fiber_basis;
  build_generator(sys.generators, opts);
  const int m = sys.fiber_dim();

  std::size_t total_rows = 0;
  for (const auto& g : sys.generators) total_rows += binomial(7, g.degree);
  sys.equations = MatQ(total_rows, static_cast<std::size_t>(7) * m);
  sys.torsion.assign(total_rows, mpq_class(0));

  std::size_t row0 = 0;
  for (const auto& g : sys.generators) {
    MatQ nu_r = g.nu.multiply(fiber_basis);
    const auto& row_masks = masks_of_degree(g.degree);
    for (std::size_t r = 0; r < row_masks.size(); ++r) {
      Mask D = row_masks[r];
      for (int axis = 0; axis < kDim; ++axis) {
        if (!(D & (1 << axis))) continue;
        int sign = contraction_sign(axis, D);
        Mask rest = D & static_cast<Mask>(~(1 << axis));
        int a = mask_index(rest);
        for (int f = 0; f < m; ++f) {
          if (sgn(nu_r(a, f)) == 0) continue;
          mpq_class& cell = sys.equations(row0 + r, static_cast<std::size_t>(axis) * m + f);
          cell += sign > 0 ? nu_r(a, f) : -nu_r(a, f);
        }
      }
      if (opts.include_torsion) {
        Scalar t = g.torsion.coefficient(D);
        if (!t.is_zero()) sys.torsion[row0 + r] = t.rat();
      }
    }
    sys.nu_restricted.push_back(std::move(nu_r));
    sys.blocks.emplace_back(g.name, binomial(7, g.degree));
    row0 += row_masks.size();
  }
  return sys;
}

MatQ SolitonEds::fundamental_identity_kernel() const {
  // Row alpha: the coefficient functional of e^{(1..7) minus alpha} applied to
  // (∗ y4)∧s on the 4-form block and (∗ y5)∧∗s on the 5-form block.
  const AltForm& s = fp_.base.three_form();
  const G2Point& p = fp_.base;
  AltForm t = p.star(s);
  MatQ k(7, 98);
  const auto& masks4 = masks_of_degree(4);
  const auto& masks5 = masks_of_degree(5);
  // block offsets in the full system: 3-form rows 0..34, 4-form rows 35..69,
  // 5-form rows 70..90, 6-form rows 91..97
  for (std::size_t i = 0; i < masks4.size(); ++i) {
    AltForm e4(4);
    e4.set(masks4[i], Scalar::integer(1));
    AltForm w = wedge(p.star(e4), s);  // 6-form
    for (int alpha = 0; alpha < 7; ++alpha) {
      Mask f6 = kFullMask & static_cast<Mask>(~(1 << alpha));
      Scalar c = w.coefficient(f6);
      if (!c.is_zero()) k(alpha, 35 + i) = c.rat();
    }
  }
  for (std::size_t i = 0; i < masks5.size(); ++i) {
    AltForm e5(5);
    e5.set(masks5[i], Scalar::integer(1));
    AltForm w = wedge(p.star(e5), t);
    for (int alpha = 0; alpha < 7; ++alpha) {
      Mask f6 = kFullMask & static_cast<Mask>(~(1 << alpha));
      Scalar c = w.coefficient(f6);
      if (!c.is_zero()) k(alpha, 70 + i) = c.rat();
    }
  }
  return k;
}

MatQ SolitonEds::z_locus_jacobian() const {
  const AltForm& s = fp_.base.three_form();
  const AltForm& b = fp_.b;
  MatQ jac(7, 56);
  // sigma directions via dual lifts of the whole map (s,b) -> z ∧ b ∧ s
  for (int f = 0; f < 35; ++f) {
    const G2PointDual& pd = dual_point(f);
    const AltFormT<DualScalar>& sd = pd.three_form();
    AltFormT<DualScalar> bd = lift_form(b, pd.ring_one());
    AltFormT<DualScalar> z = pd.star(wedge(bd, pd.star(sd)));
    AltFormT<DualScalar> c = wedge(wedge(z, bd), sd);
    for (int alpha = 0; alpha < 7; ++alpha) {
      Mask f6 = kFullMask & static_cast<Mask>(~(1 << alpha));
      auto it = c.terms().find(f6);
      if (it != c.terms().end()) jac(alpha, f) = it->second.der.rat();
    }
  }
  // beta directions: z and the middle slot are linear in b
  const G2Point& p = fp_.base;
  AltForm t = p.star(s);
  AltForm zb = p.star(wedge(b, t));
  for (int j = 0; j < 21; ++j) {
    AltForm e2(2);
    e2.set(masks_of_degree(2)[j], Scalar::integer(1));
    AltForm dz = p.star(wedge(e2, t));
    AltForm dc = wedge(wedge(dz, b), s) + wedge(wedge(zb, e2), s);
    for (int alpha = 0; alpha < 7; ++alpha) {
      Mask f6 = kFullMask & static_cast<Mask>(~(1 << alpha));
      Scalar c = dc.coefficient(f6);
      if (!c.is_zero()) jac(alpha, 35 + j) = c.rat();
    }
  }
  return jac;
}

HomWV SolitonEds::hom_from_vector(const SymbolSystem& sys,
                                  const std::vector<mpq_class>& v) const {
  const int m = sys.fiber_dim();
  HomWV h;
  for (int i = 0; i < kDim; ++i) {
    std::vector<mpq_class> fib(56, mpq_class(0));
    for (int f = 0; f < m; ++f) {
      if (sgn(v[static_cast<std::size_t>(i) * m + f]) == 0) continue;
      for (int r = 0; r < 56; ++r)
        fib[r] += sys.fiber_basis(r, f) * v[static_cast<std::size_t>(i) * m + f];
    }
    std::vector<mpq_class> sv(fib.begin(), fib.begin() + 35);
    std::vector<mpq_class> bv(fib.begin() + 35, fib.end());
    h.sigma[i] = form_from_dense(sv, 3);
    h.beta[i] = form_from_dense(bv, 2);
  }
  return h;
}

std::pair<int, int> symbol_ranks(const SymbolSystem& sys, Exec exec) {
  return rank_with_augmented(sys.equations, sys.torsion, exec);
}

IntegralElementSpace integral_elements(const SymbolSystem& sys, Exec exec) {
  std::vector<mpq_class> neg(sys.torsion.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -sys.torsion[i];
  auto x = solve(sys.equations, neg, exec);
  if (!x)
    throw InconsistentSystem("integral_elements: torsion outside the column space");
  IntegralElementSpace e;
  e.particular = std::move(*x);
  e.nullspace_basis = nullspace(sys.equations, exec);
  return e;
}

}  // namespace g2eds
