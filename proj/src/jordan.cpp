#include "lfmsemi/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace lfmsemi {

namespace {

struct Cubic {
  // monic z^3 + a z^2 + b z + c
  Complex a, b, c;

  Complex value(Complex z) const { return ((z + a) * z + b) * z + c; }
  Complex derivative(Complex z) const { return (3.0 * z + 2.0 * a) * z + b; }
};

Complex newton_polish(const Cubic& p, Complex z) {
  for (int i = 0; i < 3; ++i) {
    const Complex pv = p.value(z);
    const Complex dv = p.derivative(z);
    const double dscale = 3.0 * std::norm(z) + 2.0 * std::abs(p.a) * std::abs(z) + std::abs(p.b);
    if (std::abs(dv) <= 1e-12 * dscale + 1e-300) break;  // multiple-root plateau
    const Complex next = z - pv / dv;
    if (!finite(next) || std::abs(p.value(next)) >= std::abs(pv)) break;
    z = next;
  }
  return z;
}

std::array<Complex, 3> cubic_roots(const Cubic& p) {
  const Complex shift = p.a / 3.0;
  const Complex dp = p.b - p.a * p.a / 3.0;
  const Complex dq = 2.0 * p.a * p.a * p.a / 27.0 - p.a * p.b / 3.0 + p.c;

  const Complex disc = std::sqrt(dq * dq / 4.0 + dp * dp * dp / 27.0);
  Complex u3 = -dq / 2.0 + disc;
  const Complex u3_alt = -dq / 2.0 - disc;
  if (std::abs(u3_alt) > std::abs(u3)) u3 = u3_alt;

  std::array<Complex, 3> t;
  if (std::abs(u3) == 0.0) {
    // p and q both vanished: triple root of the depressed cubic at 0.
    t = {Complex(0.0), Complex(0.0), Complex(0.0)};
  } else {
    const Complex u = std::exp(std::log(u3) / 3.0);
    const Complex v = -dp / (3.0 * u);
    const Complex w(-0.5, std::sqrt(3.0) / 2.0);
    const Complex wb = std::conj(w);
    t = {u + v, u * w + v * wb, u * wb + v * w};
  }

  std::array<Complex, 3> roots;
  for (int i = 0; i < 3; ++i) roots[static_cast<size_t>(i)] = newton_polish(p, t[static_cast<size_t>(i)] - shift);
  return roots;
}

Cubic characteristic_cubic(const Mat3& m) {
  const Complex tr = m.trace();
  const Complex minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) +
                         (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
                         (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  return Cubic{-tr, minors, -det3(m)};
}

struct Cluster {
  Complex center;
  int multiplicity;
};

std::vector<Cluster> cluster_roots(const std::array<Complex, 3>& roots, double merge_tol) {
  std::array<int, 3> group = {0, 1, 2};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)]) <= merge_tol) {
        const int from = std::max(group[static_cast<size_t>(i)], group[static_cast<size_t>(j)]);
        const int to = std::min(group[static_cast<size_t>(i)], group[static_cast<size_t>(j)]);
        for (auto& g : group)
          if (g == from) g = to;
      }

  std::vector<Cluster> out;
  for (int g = 0; g < 3; ++g) {
    Complex sum = 0.0;
    int count = 0;
    for (int i = 0; i < 3; ++i)
      if (group[static_cast<size_t>(i)] == g) {
        sum += roots[static_cast<size_t>(i)];
        ++count;
      }
    if (count > 0) out.push_back({sum / static_cast<double>(count), count});
  }
  return out;
}

void sort_clusters(std::vector<Cluster>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Cluster& l, const Cluster& r) {
    const double ml = std::abs(l.center), mr = std::abs(r.center);
    if (ml != mr) return ml > mr;
    return std::arg(l.center) > std::arg(r.center);
  });
}

// Multiple roots only come out of the cubic with O(eps^(1/mult)) accuracy,
// but their sum is pinned by the trace; recover the lost digits via Vieta.
void recenter_clusters(const Mat3& m, std::vector<Cluster>& cs) {
  const Complex tr = m.trace();
  if (cs.size() == 1) {
    cs[0].center = tr / 3.0;
  } else if (cs.size() == 2) {
    Cluster& multiple = cs[0].multiplicity == 2 ? cs[0] : cs[1];
    const Cluster& simple = cs[0].multiplicity == 2 ? cs[1] : cs[0];
    multiple.center = (tr - simple.center) / 2.0;
  }
}

// Full-pivot elimination; returns pivot magnitudes (descending by
// construction) and the triangular system needed for back substitution.
struct Elimination {
  Mat3 u;                      // eliminated matrix, rows/cols permuted
  std::array<int, 3> colperm;  // u column j holds variable colperm[j]
  std::array<double, 3> pivots;
};

Elimination eliminate(const Mat3& m) {
  Elimination el;
  el.u = m;
  el.colperm = {0, 1, 2};
  el.pivots = {0.0, 0.0, 0.0};
  for (int k = 0; k < 3; ++k) {
    int pi = k, pj = k;
    double best = 0.0;
    for (int i = k; i < 3; ++i)
      for (int j = k; j < 3; ++j)
        if (std::abs(el.u(i, j)) > best) {
          best = std::abs(el.u(i, j));
          pi = i;
          pj = j;
        }
    el.pivots[static_cast<size_t>(k)] = best;
    if (best == 0.0) break;
    if (pi != k)
      for (int j = 0; j < 3; ++j) std::swap(el.u(k, j), el.u(pi, j));
    if (pj != k) {
      for (int i = 0; i < 3; ++i) std::swap(el.u(i, k), el.u(i, pj));
      std::swap(el.colperm[static_cast<size_t>(k)], el.colperm[static_cast<size_t>(pj)]);
    }
    for (int i = k + 1; i < 3; ++i) {
      const Complex f = el.u(i, k) / el.u(k, k);
      el.u(i, k) = 0.0;
      for (int j = k + 1; j < 3; ++j) el.u(i, j) -= f * el.u(k, j);
    }
  }
  return el;
}

void orthonormalize(std::vector<Vec3>& vs) {
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) vs[i] = vs[i] - inner(vs[i], vs[j]) * vs[j];
    const double n = vs[i].norm();
    vs[i] = Complex(1.0 / n) * vs[i];
  }
}

// Candidate chain top maximizing ||reducer^(size-1) v||; a few power-iteration
// steps on the normal matrix refine the best basis candidate.
Vec3 best_direction(const Mat3& a, const std::vector<Vec3>& basis) {
  Vec3 best = basis.front();
  double best_norm = -1.0;
  auto consider = [&](const Vec3& v) {
    const double n = v.norm();
    if (n == 0.0) return;
    const Vec3 unit = Complex(1.0 / n) * v;
    const double an = (a * unit).norm();
    if (an > best_norm) {
      best_norm = an;
      best = unit;
    }
  };
  for (size_t i = 0; i < basis.size(); ++i) {
    consider(basis[i]);
    for (size_t j = i + 1; j < basis.size(); ++j) {
      consider(basis[i] + basis[j]);
      consider(basis[i] - basis[j]);
      consider(basis[i] + Complex(0.0, 1.0) * basis[j]);
      consider(basis[i] - Complex(0.0, 1.0) * basis[j]);
    }
  }
  const Mat3 normal = a.adjoint() * a;
  for (int it = 0; it < 2; ++it) {
    Vec3 next = normal * best;
    // Keep the iterate inside span(basis): project back.
    Vec3 proj;
    for (const auto& b : basis) proj = proj + inner(next, b) * b;
    const double n = proj.norm();
    if (n <= 1e-14 * (a.frobenius_norm() * a.frobenius_norm() + 1.0)) break;
    proj = Complex(1.0 / n) * proj;
    if ((a * proj).norm() > best_norm) {
      best_norm = (a * proj).norm();
      best = proj;
    }
  }
  return best;
}

// Validates that `center` is a credible eigenvalue of algebraic multiplicity
// `mult`: the kernel of (m - center I) is nonempty and the kernel of the
// mult-th power has at least `mult` dimensions (pivot thresholds scaled per
// power of ||m||).
bool validate_multiplicity(const Mat3& m, Complex center, int mult, double norm) {
  Mat3 n = m;
  for (int i = 0; i < 3; ++i) n(i, i) -= center;
  const double scale = std::max(norm, 1e-300);
  if (kernel_dim(n, tol::rank * scale) < 1) return false;
  Mat3 p = n;
  double pscale = scale;
  for (int k = 2; k <= mult; ++k) {
    p = p * n;
    pscale *= scale;
  }
  return kernel_dim(p, tol::rank * pscale) >= mult;
}

// Merge clusters that the base tolerance left apart but that rank tests
// identify as one eigenvalue. Needed because roots of multiplicity k only
// come out with O(eps^(1/k)) accuracy, far wider than tol::cluster.
// Candidate centers come from Vieta, not from the scattered roots.
void refine_clusters(const Mat3& m, std::vector<Cluster>& cs, double norm) {
  const double wide = 1e-4 * std::max(norm, 1e-300);
  const Complex tr = m.trace();

  if (cs.size() >= 2) {
    double spread = 0.0;
    for (size_t i = 0; i < cs.size(); ++i)
      for (size_t j = i + 1; j < cs.size(); ++j)
        spread = std::max(spread, std::abs(cs[i].center - cs[j].center));
    if (spread <= wide) {
      const Complex center = tr / 3.0;
      if (validate_multiplicity(m, center, 3, norm)) {
        cs = {{center, 3}};
        return;
      }
    }
  }
  if (cs.size() == 3) {
    for (size_t i = 0; i < 3 && cs.size() == 3; ++i)
      for (size_t j = i + 1; j < 3; ++j) {
        if (std::abs(cs[i].center - cs[j].center) > wide) continue;
        const size_t k = 3 - i - j;
        const Complex center = (tr - cs[k].center) / 2.0;
        if (!validate_multiplicity(m, center, 2, norm)) continue;
        cs = {{center, 2}, cs[k]};
        break;
      }
  }
}

std::vector<std::pair<JordanBlock, std::vector<Vec3>>> build_chains(const Mat3& m, const Cluster& c,
                                                                    double norm) {
  Mat3 n = m;
  for (int i = 0; i < 3; ++i) n(i, i) -= c.center;
  const double scale = std::max(norm, 1e-300);
  const double tol1 = tol::rank * scale;

  std::vector<std::pair<JordanBlock, std::vector<Vec3>>> out;
  if (c.multiplicity == 1) {
    const Vec3 v = kernel_basis(n, tol1, 1).front();
    out.push_back({{c.center, 1}, {v}});
    return out;
  }

  if (c.multiplicity == 2) {
    const int geo = std::min(kernel_dim(n, tol1), 2);
    if (geo >= 2) {
      const auto basis = kernel_basis(n, tol1, 2);
      out.push_back({{c.center, 1}, {basis[0]}});
      out.push_back({{c.center, 1}, {basis[1]}});
      return out;
    }
    const Mat3 n2 = n * n;
    const auto k2 = kernel_basis(n2, tol::rank * scale * scale, 2);
    const Vec3 top = best_direction(n, k2);
    Vec3 eig = n * top;
    const double en = eig.norm();
    if (en == 0.0) fail(Errc::IllConditioned, "degenerate Jordan chain of length 2");
    out.push_back({{c.center, 2}, {Complex(1.0 / en) * eig, Complex(1.0 / en) * top}});
    return out;
  }

  // Whole spectrum in one cluster.
  const int geo = std::min(kernel_dim(n, tol1), 3);
  if (geo >= 3) {
    const auto basis = kernel_basis(n, tol1, 3);
    for (const auto& v : basis) out.push_back({{c.center, 1}, {v}});
    return out;
  }
  const std::vector<Vec3> full = {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}, Vec3{0.0, 0.0, 1.0}};
  if (geo == 2) {
    // Blocks of sizes 2 and 1; n^2 vanishes on all of C^3.
    const Vec3 top = best_direction(n, full);
    Vec3 eig = n * top;
    const double en = eig.norm();
    if (en == 0.0) fail(Errc::IllConditioned, "degenerate Jordan chain of length 2");
    eig = Complex(1.0 / en) * eig;
    out.push_back({{c.center, 2}, {eig, Complex(1.0 / en) * top}});
    auto ker = kernel_basis(n, tol1, 2);
    // Pick the kernel direction most independent of the chain eigenvector.
    Vec3 other = ker[0] - inner(ker[0], eig) * eig;
    if (ker.size() > 1) {
      const Vec3 alt = ker[1] - inner(ker[1], eig) * eig;
      if (alt.norm() > other.norm()) other = alt;
    }
    const double on = other.norm();
    if (on == 0.0) fail(Errc::IllConditioned, "dependent Jordan chains");
    out.push_back({{c.center, 1}, {Complex(1.0 / on) * other}});
    return out;
  }
  // Single block of size 3.
  const Mat3 n2 = n * n;
  const Vec3 top = best_direction(n2, full);
  const Vec3 mid = n * top;
  Vec3 eig = n2 * top;
  const double en = eig.norm();
  if (en == 0.0) fail(Errc::IllConditioned, "degenerate Jordan chain of length 3");
  out.push_back({{c.center, 3},
                 {Complex(1.0 / en) * eig, Complex(1.0 / en) * mid, Complex(1.0 / en) * top}});
  return out;
}

}  // namespace

Mat3 JordanDecomposition::jordan_matrix() const {
  Mat3 lam;
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size; ++i) {
      lam(off + i, off + i) = b.eigenvalue;
      if (i + 1 < b.size) lam(off + i, off + i + 1) = 1.0;
    }
    off += b.size;
  }
  return lam;
}

int JordanDecomposition::block_offset(int block_index) const {
  int off = 0;
  for (int i = 0; i < block_index; ++i) off += blocks[static_cast<size_t>(i)].size;
  return off;
}

std::vector<std::pair<Complex, int>> eigenvalues3(const Mat3& m) {
  const auto roots = cubic_roots(characteristic_cubic(m));
  auto clusters = cluster_roots(roots, tol::cluster * m.frobenius_norm());
  recenter_clusters(m, clusters);
  sort_clusters(clusters);
  std::vector<std::pair<Complex, int>> out;
  out.reserve(clusters.size());
  for (const auto& c : clusters) out.emplace_back(c.center, c.multiplicity);
  return out;
}

int kernel_dim(const Mat3& m, double pivot_tol) {
  const auto el = eliminate(m);
  int rank = 0;
  for (int k = 0; k < 3; ++k)
    if (el.pivots[static_cast<size_t>(k)] > pivot_tol) ++rank;
  return 3 - rank;
}

std::vector<Vec3> kernel_basis(const Mat3& m, double pivot_tol, int min_dim) {
  const auto el = eliminate(m);
  int rank = 0;
  for (int k = 0; k < 3; ++k)
    if (el.pivots[static_cast<size_t>(k)] > pivot_tol) ++rank;
  rank = std::min(rank, 3 - min_dim);

  std::vector<Vec3> basis;
  for (int free_col = rank; free_col < 3; ++free_col) {
    std::array<Complex, 3> xp{};  // solution in permuted variables
    xp[static_cast<size_t>(free_col)] = 1.0;
    for (int k = rank - 1; k >= 0; --k) {
      Complex s = 0.0;
      for (int j = k + 1; j < 3; ++j) s += el.u(k, j) * xp[static_cast<size_t>(j)];
      xp[static_cast<size_t>(k)] = -s / el.u(k, k);
    }
    Vec3 v;
    for (int i = 0; i < 3; ++i) v[el.colperm[static_cast<size_t>(i)]] = xp[static_cast<size_t>(i)];
    basis.push_back(v);
  }
  orthonormalize(basis);
  return basis;
}

JordanDecomposition jordan_form(const Mat3& m) {
  const double norm = m.frobenius_norm();
  if (std::abs(det3(m)) <= tol::singular * norm * norm * norm)
    fail(Errc::SingularMatrix, "zero eigenvalue: matrix not invertible");

  const auto roots = cubic_roots(characteristic_cubic(m));
  auto clusters = cluster_roots(roots, tol::cluster * norm);
  recenter_clusters(m, clusters);
  refine_clusters(m, clusters, norm);

  std::vector<std::pair<JordanBlock, std::vector<Vec3>>> chains;
  for (const auto& c : clusters)
    for (auto& chain : build_chains(m, c, norm)) chains.push_back(std::move(chain));

  std::sort(chains.begin(), chains.end(), [](const auto& l, const auto& r) {
    if (l.first.size != r.first.size) return l.first.size > r.first.size;
    const double ml = std::abs(l.first.eigenvalue), mr = std::abs(r.first.eigenvalue);
    if (ml != mr) return ml > mr;
    return std::arg(l.first.eigenvalue) > std::arg(r.first.eigenvalue);
  });

  JordanDecomposition d;
  d.source_norm = norm;
  int col = 0;
  for (const auto& [block, vectors] : chains) {
    d.blocks.push_back(block);
    for (const auto& v : vectors) d.S.set_col(col++, v);
  }
  if (col != 3) fail(Errc::IllConditioned, "Jordan chains do not span");

  try {
    d.S_inv = mat_inverse(d.S);
  } catch (const Error&) {
    fail(Errc::IllConditioned, "generalized eigenvector matrix is numerically singular");
  }

  const double recon_err = (d.reconstruct() - m).frobenius_norm();
  const double id_err = (d.S * d.S_inv - Mat3::identity()).frobenius_norm();
  if (recon_err > tol::recon * norm || id_err > tol::recon)
    fail(Errc::IllConditioned, "Jordan reconstruction residual too large");
  return d;
}

}  // namespace lfmsemi
