#include "g2eds/polar.hpp"

#include "g2eds/rng.hpp"

namespace g2eds {

namespace {

// determinant of rows[r][axes[c]] over the selected axes (sizes <= 6)
mpq_class det_on_axes(const std::vector<const std::vector<mpq_class>*>& rows,
                      const std::vector<int>& axes, std::size_t row0, unsigned cols_left) {
  int c0 = -1;
  for (std::size_t c = 0; c < axes.size(); ++c)
    if (cols_left & (1u << c)) {
      c0 = static_cast<int>(c);
      break;
    }
  if (row0 + 1 == rows.size()) return (*rows[row0])[axes[c0]];
  mpq_class acc(0);
  int pos = 0;
  for (std::size_t c = 0; c < axes.size(); ++c) {
    if (!(cols_left & (1u << c))) continue;
    const mpq_class& entry = (*rows[row0])[axes[c]];
    if (sgn(entry) != 0) {
      mpq_class sub = det_on_axes(rows, axes, row0 + 1, cols_left & ~(1u << c));
      if (pos % 2 == 0)
        acc += entry * sub;
      else
        acc -= entry * sub;
    }
    ++pos;
  }
  return acc;
}

mpq_class det_on_axes(const std::vector<const std::vector<mpq_class>*>& rows,
                      const std::vector<int>& axes) {
  if (rows.empty()) return mpq_class(1);
  return det_on_axes(rows, axes, 0, (1u << axes.size()) - 1);
}

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 0 && k <= n) subsets_rec(n, k, 0, cur, out);
  return out;
}

}  // namespace

MatQ polar_matrix(const SymbolSystem& sys, const std::vector<FlagVector>& flag, int k) {
  const int m = sys.fiber_dim();
  MatQ rows(0, 7 + m);
  for (std::size_t gi = 0; gi < sys.generators.size(); ++gi) {
    const GeneratorSymbol& g = sys.generators[gi];
    const MatQ& nu = sys.nu_restricted[gi];
    const int d = g.degree;
    if (d - 1 > k) continue;
    const auto& amasks = masks_of_degree(d - 1);
    for (const auto& S : subsets(k, d - 1)) {
      std::vector<mpq_class> row(7 + m, mpq_class(0));
      // ν_A(v) for each flag vector in the subset
      for (std::size_t ai = 0; ai < amasks.size(); ++ai) {
        Mask A = amasks[ai];
        auto axes = mask_axes(A);

        // last-slot term: (-1)^(d-1) ν_A(w) e^A(v_S)
        std::vector<const std::vector<mpq_class>*> vs;
        for (int idx : S) vs.push_back(&flag[idx].w);
        mpq_class detA = det_on_axes(vs, axes);
        if (sgn(detA) != 0) {
          if ((d - 1) % 2 == 1) detA = -detA;
          for (int f = 0; f < m; ++f)
            if (sgn(nu(ai, f)) != 0) row[7 + f] += detA * nu(ai, f);
        }

        // earlier slots: (-1)^a ν_A(v_{S_a}) e^A(v_{S\a}, e_j)
        for (std::size_t a = 0; a < S.size(); ++a) {
          mpq_class nuval(0);
          for (int f = 0; f < m; ++f)
            if (sgn(nu(ai, f)) != 0) nuval += nu(ai, f) * flag[S[a]].fiber[f];
          if (sgn(nuval) == 0) continue;
          if (a % 2 == 1) nuval = -nuval;
          std::vector<const std::vector<mpq_class>*> rest;
          for (std::size_t b = 0; b < S.size(); ++b)
            if (b != a) rest.push_back(&flag[S[b]].w);
          for (std::size_t c = 0; c < axes.size(); ++c) {
            int j = axes[c];
            std::vector<int> sub_axes;
            for (std::size_t cc = 0; cc < axes.size(); ++cc)
              if (cc != c) sub_axes.push_back(axes[cc]);
            mpq_class minor = det_on_axes(rest, sub_axes);
            if (sgn(minor) == 0) continue;
            // cofactor along the last row (0-based index d-2), column c
            if ((static_cast<int>(S.size()) - 1 + static_cast<int>(c)) % 2 == 1)
              minor = -minor;
            row[j] += nuval * minor;
          }
        }
      }

      // torsion: θ(v_S, e_j)
      for (const auto& [M, coeff] : g.torsion.terms()) {
        auto axes = mask_axes(M);
        std::vector<const std::vector<mpq_class>*> vs;
        for (int idx : S) vs.push_back(&flag[idx].w);
        for (std::size_t c = 0; c < axes.size(); ++c) {
          int j = axes[c];
          std::vector<int> sub_axes;
          for (std::size_t cc = 0; cc < axes.size(); ++cc)
            if (cc != c) sub_axes.push_back(axes[cc]);
          mpq_class minor = det_on_axes(vs, sub_axes);
          if (sgn(minor) == 0) continue;
          if ((static_cast<int>(S.size()) + static_cast<int>(c)) % 2 == 1) minor = -minor;
          row[j] += coeff.rat() * minor;
        }
      }

      bool nonzero = false;
      for (const auto& x : row)
        if (sgn(x) != 0) {
          nonzero = true;
          break;
        }
      if (nonzero) rows.append_row(row);
    }
  }
  return rows;
}

std::pair<std::vector<std::vector<mpq_class>>, int> polar_space(
    const SymbolSystem& sys, const std::vector<FlagVector>& flag, int k) {
  MatQ pm = polar_matrix(sys, flag, k);
  if (pm.rows() == 0) {
    std::vector<std::vector<mpq_class>> full;
    for (int i = 0; i < 7 + sys.fiber_dim(); ++i) {
      std::vector<mpq_class> e(7 + sys.fiber_dim(), mpq_class(0));
      e[i] = 1;
      full.push_back(std::move(e));
    }
    return {full, 0};
  }
  return {nullspace(pm), rank(pm)};
}

namespace {

std::vector<FlagVector> flag_from_w(const SymbolSystem& sys,
                                    const std::vector<mpq_class>& element, const MatQ& flag_w) {
  const int m = sys.fiber_dim();
  std::vector<FlagVector> flag(7);
  for (int v = 0; v < 7; ++v) {
    flag[v].w.assign(7, mpq_class(0));
    for (int i = 0; i < 7; ++i) flag[v].w[i] = flag_w(i, v);
    flag[v].fiber.assign(m, mpq_class(0));
    for (int i = 0; i < 7; ++i) {
      if (sgn(flag_w(i, v)) == 0) continue;
      for (int f = 0; f < m; ++f)
        flag[v].fiber[f] += flag_w(i, v) * element[static_cast<std::size_t>(i) * m + f];
    }
  }
  return flag;
}

CharacterData characters_for_flag(const SymbolSystem& sys, int rank_a, int dim,
                                  const std::vector<FlagVector>& flag, Exec exec) {
  CharacterData cd;
  cd.codimension = rank_a;
  cd.dimension = dim;
  for (int k = 0; k <= 6; ++k) {
    MatQ pm = polar_matrix(sys, flag, k);
    cd.polar_ranks[k] = pm.rows() == 0 ? 0 : rank(pm, exec);
  }
  cd.characters[0] = cd.polar_ranks[0];
  for (int k = 1; k <= 6; ++k) cd.characters[k] = cd.polar_ranks[k] - cd.polar_ranks[k - 1];
  cd.characters[7] = sys.fiber_dim() - cd.polar_ranks[6];
  cd.sum_c = 0;
  for (int k = 0; k <= 6; ++k) cd.sum_c += cd.polar_ranks[k];
  cd.sum_ks = 0;
  for (int k = 0; k <= 7; ++k) cd.sum_ks += k * cd.characters[k];
  // codim >= sum c_k for every integral flag; equality certifies involutivity
  cd.gap = cd.codimension - cd.sum_c;
  cd.verdict = cd.gap == 0 ? CharacterData::Verdict::involutive
                           : CharacterData::Verdict::not_involutive;
  cd.flag = flag;
  return cd;
}

bool lex_better(const CharacterData& a, const CharacterData& b) {
  for (int k = 0; k <= 6; ++k) {
    if (a.polar_ranks[k] != b.polar_ranks[k]) return a.polar_ranks[k] > b.polar_ranks[k];
  }
  return false;
}

MatQ random_flag_w(SplitMix64& rng) {
  for (;;) {
    MatQ w(7, 7);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) w(i, j) = rng.signed_int(3);
    if (rank(w, Exec::serial) == 7) return w;
  }
}

}  // namespace

CharacterData cartan_characters(const SymbolSystem& sys, const std::vector<mpq_class>& element,
                                const MatQ& flag_w, Exec exec) {
  if (rank(flag_w, exec) != 7)
    throw std::domain_error("cartan_characters: degenerate flag");
  auto [rank_a, rank_aug] = symbol_ranks(sys, exec);
  if (rank_aug != rank_a)
    throw InconsistentSystem("cartan_characters: inconsistent symbol");
  int dim = sys.unknowns() - rank_a;
  return characters_for_flag(sys, rank_a, dim, flag_from_w(sys, element, flag_w), exec);
}

CharacterData cartan_test_system(const SymbolSystem& sys, int trials, std::uint64_t seed,
                                 Exec exec) {
  auto [rank_a, rank_aug] = symbol_ranks(sys, exec);
  if (rank_aug != rank_a) {
    CharacterData cd;
    cd.codimension = rank_a;
    cd.verdict = CharacterData::Verdict::inconsistent;
    return cd;
  }
  IntegralElementSpace space = integral_elements(sys, exec);
  const int dim = space.dimension();

  SplitMix64 rng(seed);
  std::vector<mpq_class> element = space.particular;
  for (const auto& nv : space.nullspace_basis) {
    long c = rng.signed_int(2);
    if (c == 0) continue;
    for (std::size_t i = 0; i < element.size(); ++i)
      if (sgn(nv[i]) != 0) element[i] += c * nv[i];
  }

  std::optional<CharacterData> best;

  auto consider = [&](const MatQ& flag_w) {
    CharacterData cd =
        characters_for_flag(sys, rank_a, dim, flag_from_w(sys, element, flag_w), exec);
    if (!best || lex_better(cd, *best)) best = std::move(cd);
  };

  consider(MatQ::identity(7, mpq_class(1)));

  // greedy per-step choice: extend the prefix by the candidate that maximises
  // the next polar rank
  {
    MatQ flag_w(7, 7);
    for (int step = 0; step < 7; ++step) {
      std::optional<int> best_rank;
      MatQ best_col(7, 1);
      for (int cand = 0; cand < 7 + 6; ++cand) {
        MatQ trial = flag_w;
        if (cand < 7) {
          for (int i = 0; i < 7; ++i) trial(i, step) = (i == cand) ? 1 : 0;
        } else {
          for (int i = 0; i < 7; ++i) trial(i, step) = rng.signed_int(3);
        }
        MatQ prefix = trial.select_columns([&] {
          std::vector<int> c;
          for (int i = 0; i <= step; ++i) c.push_back(i);
          return c;
        }());
        if (rank(prefix, exec) != step + 1) continue;
        auto flag = flag_from_w(sys, element, trial);
        MatQ pm = polar_matrix(sys, flag, step + 1);
        int r = pm.rows() == 0 ? 0 : rank(pm, exec);
        if (!best_rank || r > *best_rank) {
          best_rank = r;
          for (int i = 0; i < 7; ++i) best_col(i, 0) = trial(i, step);
        }
      }
      for (int i = 0; i < 7; ++i) flag_w(i, step) = best_col(i, 0);
    }
    consider(flag_w);
  }

  for (int t = 0; t < trials; ++t) consider(random_flag_w(rng));

  return *best;
}

CharacterData cartan_test(const FiberPoint& fp, const mpq_class& lambda, int trials,
                          std::uint64_t seed) {
  SolitonEds eds(fp, lambda);
  return cartan_test_system(eds.system(), trials, seed);
}

HarmonicReport harmonic_extension(const FiberPoint& fp, const mpq_class& lambda, int trials,
                                  std::uint64_t seed) {
  SolitonEds eds(fp, lambda);
  SymbolOptions opts;
  opts.harmonic = true;
  SymbolSystem sys = eds.system(opts);
  HarmonicReport rep;
  rep.rank = symbol_ranks(sys).first;
  rep.dimension = sys.unknowns() - rep.rank;
  rep.data = cartan_test_system(sys, trials, seed);
  rep.generality_count = rep.data.characters[6] - 14;
  return rep;
}

GradientReport gradient_augmentation_consistency(const FiberPoint& fp, const mpq_class& lambda) {
  SolitonEds eds(fp, lambda);
  SymbolOptions opts;
  opts.gradient = true;
  SymbolSystem sys = eds.system(opts);
  GradientReport rep;
  auto [ra, raug] = symbol_ranks(sys);
  rep.rank = ra;
  rep.rank_augmented = raug;
  rep.consistent = (ra == raug);
  auto obs = gradient_obstruction(fp);
  rep.obstruction = obs.one_form;
  rep.obstruction_norm2 = fp.base.inner(obs.one_form, obs.one_form);
  rep.matches_obstruction = (rep.consistent == rep.obstruction.is_zero());
  if (rep.consistent) rep.dim_if_consistent = sys.unknowns() - ra;
  return rep;
}

ZLocusReport z_locus_cartan_test(const FiberPoint& fp, const mpq_class& lambda, int trials,
                                 std::uint64_t seed, std::optional<int> expected_dc_rank) {
  SolitonEds eds(fp, lambda);
  ZLocusReport rep;
  auto obs = gradient_obstruction(fp);
  rep.on_z = obs.z_six_form.is_zero();
  if (!rep.on_z) throw std::domain_error("z_locus_cartan_test: point not on Z");

  MatQ jac = eds.z_locus_jacobian();
  rep.dc_rank = rank(jac);
  if (expected_dc_rank && rep.dc_rank != *expected_dc_rank)
    throw std::domain_error("z_locus_cartan_test: rank drop at a non-smooth point of Z");

  auto kernel = nullspace(jac);
  MatQ basis(56, kernel.size());
  for (std::size_t c = 0; c < kernel.size(); ++c)
    for (int r = 0; r < 56; ++r) basis(r, c) = kernel[c][r];
  rep.tangent_dim = static_cast<int>(kernel.size());

  SymbolOptions opts;
  opts.gradient = true;
  SymbolSystem sys = eds.system_restricted(opts, basis);
  rep.data = cartan_test_system(sys, trials, seed);
  rep.gap = rep.data.verdict == CharacterData::Verdict::inconsistent ? -1 : rep.data.gap;
  return rep;
}

}  // namespace g2eds
