#include "esa/obstruction.hpp"

#include <algorithm>
#include <bit>

#include "esa/errors.hpp"

namespace esa {

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::string pair_text(std::size_t u, std::size_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Largest q with 2^q <= x, for x >= 1.
int floor_log2(std::uint64_t x) { return 63 - std::countl_zero(x); }

// Records one pair in the running factorization verdict.
void record_pair(FactorizationResult& out, std::size_t u, std::size_t v, const Rational& d, const Rational& l1,
                 const Rational& summing, const std::vector<VertexLabel>* labels) {
  auto name = [&](std::size_t i) { return labels ? (*labels)[i].to_string() : std::to_string(i); };
  if (l1 > d && out.l1_side) {
    out.l1_side = false;
    out.witness = "l1 side fails at " + name(u) + " " + name(v) + ": " + fraction_string(l1) + " > " +
                  fraction_string(d);
  }
  if (summing == 0) {
    if (out.bounded) {
      out.bounded = false;
      out.worst_u = u;
      out.worst_v = v;
      if (out.witness.empty()) out.witness = "equal images at " + name(u) + " " + name(v);
    }
    return;
  }
  if (!out.bounded) return;
  const Rational ratio = d / summing;
  if (ratio > out.threshold) {
    out.threshold = ratio;
    out.worst_u = u;
    out.worst_v = v;
  }
}

void finish_factorization(FactorizationResult& out, const std::optional<Rational>& C) {
  if (!C) return;
  out.pass = out.l1_side && out.bounded && *C > out.threshold;
  if (!out.pass && out.witness.empty())
    out.witness = "C = " + fraction_string(*C) + " does not exceed " + fraction_string(out.threshold);
}

FactorizationResult factorization_sweep(const std::vector<RationalVector>& images, const MetricTable& metric,
                                        const std::optional<Rational>& C, const std::vector<VertexLabel>* labels) {
  if (images.size() != metric.size()) throw DomainError("images do not cover the metric's vertices");
  FactorizationResult out;
  for (std::size_t u = 0; u < images.size(); ++u) {
    for (std::size_t v = u + 1; v < images.size(); ++v) {
      const RationalVector diff = images[u] - images[v];
      record_pair(out, u, v, metric.distance(u, v), l1_norm(diff), summing_norm(diff), labels);
    }
  }
  finish_factorization(out, C);
  return out;
}

}  // namespace

RationalEmbedding scaled_factorization_images(const EmbeddingTable& table) {
  const std::int64_t scale = l1_norm(table.top());
  if (scale == 0) throw DomainError("top image is zero");
  RationalEmbedding f;
  f.labels = table.labels;
  for (const auto& x : table.images) f.images.push_back(to_rational(x).scaled(Rational(1, scale)));
  return f;
}

FactorizationResult check_factorization(const std::vector<RationalVector>& images, const MetricTable& metric,
                                        const std::optional<Rational>& C) {
  return factorization_sweep(images, metric, C, nullptr);
}

FactorizationResult check_factorization(const RationalEmbedding& f, const GraphInstance& g, const MetricTable& metric) {
  if (f.labels.size() != f.images.size()) throw DomainError("labels and images differ in count");
  std::vector<std::optional<RationalVector>> ordered(g.vertices.size());
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    const auto at = g.find(f.labels[i]);
    if (!at) throw DomainError("label " + f.labels[i].to_string() + " is not a vertex of the graph");
    ordered[*at] = f.images[i];
  }
  std::vector<RationalVector> images;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (!ordered[i]) throw DomainError("no image for vertex " + g.vertices[i].to_string());
    images.push_back(*ordered[i]);
  }
  return factorization_sweep(images, metric, f.C, &g.vertices);
}

FactorizationResult check_factorization(const EmbeddingTable& table, const MetricTable& metric,
                                        const std::optional<Rational>& C) {
  if (table.images.size() != metric.size()) throw DomainError("embedding table does not cover the metric's vertices");
  const DenseImages dense = materialize(table);
  const PairNorms l1 = pairwise_norms(dense, NormKind::l1);
  const PairNorms summing = pairwise_norms(dense, NormKind::summing);
  const Rational scale(l1_norm(table.top()));
  if (scale == 0) throw DomainError("top image is zero");
  FactorizationResult out;
  for (std::size_t u = 0; u < metric.size(); ++u)
    for (std::size_t v = u + 1; v < metric.size(); ++v)
      record_pair(out, u, v, metric.distance(u, v), Rational(l1.at(u, v)) / scale,
                  Rational(summing.at(u, v)) / scale, &table.labels);
  finish_factorization(out, C);
  return out;
}

MidpointReport check_midpoint_family(const RationalVector& x0, const std::vector<RationalVector>& xs, const Rational& eta,
                                     const Rational& C) {
  if (xs.size() < 2) throw DomainError("a midpoint family needs at least two vectors x_i");
  if (x0.is_zero()) throw PreconditionError("x_0 must be nonzero");
  if (eta <= 0 || eta >= 1) throw PreconditionError("eta must lie strictly between 0 and 1");
  if (C <= 1) throw PreconditionError("C must exceed 1");
  MidpointReport report;
  const Rational n0 = l1_norm(x0);
  const Rational lo = (1 - eta) / 2 * n0;
  const Rational hi = (1 + eta) / 2 * n0;
  auto note = [&](const std::string& text) {
    if (report.witness.empty()) report.witness = text;
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rational a = l1_norm(xs[i]);
    if (a < lo || a > hi) {
      report.midpoint = false;
      note("||x_" + std::to_string(i + 1) + "||_1 = " + fraction_string(a) + " outside the midpoint window");
    }
    const Rational b = l1_norm(x0 - xs[i]);
    if (b < lo || b > hi) {
      report.midpoint2 = false;
      note("||x_0 - x_" + std::to_string(i + 1) + "||_1 = " + fraction_string(b) + " outside the midpoint window");
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const RationalVector diff = xs[i] - xs[j];
      const Rational s = summing_norm(diff);
      const Rational l = l1_norm(diff);
      if (!(s * C > l) || l * C < n0) {
        report.far = false;
        note("far fails for " + pair_text(i + 1, j + 1) + ": summing " + fraction_string(s) + ", l1 " +
             fraction_string(l));
      }
    }
  }
  return report;
}

ZFamilyCheck validate_zfamily(const ZFamily& z) {
  ZFamilyCheck check;
  auto note = [&](const std::string& text) {
    if (check.witness.empty()) check.witness = text;
  };
  if (z.N == 0 || z.alpha <= 0 || z.alpha >= 1) {
    check.suppz = false;
    note("N must be positive and alpha in (0,1)");
    return check;
  }
  for (std::size_t i = 0; i < z.k(); ++i) {
    if (z.z[i].size() != z.N) {
      check.suppz = false;
      note("z_" + std::to_string(i + 1) + " is not indexed by 1..N");
      return check;
    }
  }
  const Rational aN = z.alphaN();
  if (aN < 2) {
    check.alphaN = false;
    note("alpha N = " + fraction_string(aN) + " < 2");
  }
  for (std::size_t i = 0; i < z.k(); ++i) {
    for (std::size_t j = i + 1; j < z.k(); ++j) {
      Rational prefix = 0, best = 0;
      for (std::uint64_t m = 0; m < z.N; ++m) {
        const Rational d = z.z[i][m] - z.z[j][m];
        if (abs_of(d) > 1 && check.zdiff) {
          check.zdiff = false;
          note("|z_" + std::to_string(i + 1) + "," + std::to_string(m + 1) + " - z_" + std::to_string(j + 1) + "," +
               std::to_string(m + 1) + "| > 1");
        }
        prefix += d;
        best = std::max(best, abs_of(prefix));
      }
      if (best < aN && check.lfarz) {
        check.lfarz = false;
        note("||z_" + std::to_string(i + 1) + " - z_" + std::to_string(j + 1) + "||_s = " + fraction_string(best) +
             " < alpha N");
      }
    }
  }
  return check;
}

RationalVector stretch_operator(const std::vector<std::uint64_t>& b, const RationalVector& y) {
  if (b.empty() || b[0] != 0) throw DomainError("stretch must start at b_0 = 0");
  const std::uint64_t p = b.size() - 1;
  RationalVector out;
  for (const auto& r : y.runs()) {
    std::uint64_t m = r.start;
    for (; m < r.end() && m <= p; ++m) {
      const std::uint64_t len = b[m] - b[m - 1];
      out.append(b[m - 1] + 1, len, r.value / Rational(len));
    }
    if (m < r.end()) out.append(b[p] + (m - p), r.end() - m, r.value);
  }
  return out;
}

ReductionResult reduce_family(const RationalVector& x0, const std::vector<RationalVector>& xs, const Rational& C) {
  if (C <= 1) throw PreconditionError("C must exceed 1");
  if (xs.size() < 2) throw PreconditionError("the reduction needs at least two vectors x_i");
  for (const auto& r : x0.runs())
    if (boost::multiprecision::denominator(r.value) != 1)
      throw PreconditionError("x_0 must have integer coefficients");
  const Rational norm0 = l1_norm(x0);
  if (norm0 < 4 * C * C) throw PreconditionError("||x_0||_1 = " + fraction_string(norm0) + " is below 4C^2");
  const std::uint64_t p = x0.support_end();
  constexpr std::uint64_t kMaxStretch = std::uint64_t{1} << 16;
  if (norm0 + Rational(p) > Rational(kMaxStretch))
    throw ResourceError("x_0 is too long for the dense reduction (limit 65536 coordinates)");

  ReductionResult result;
  result.stretch.assign(p + 1, 0);
  for (std::uint64_t m = 1; m <= p; ++m) {
    const BigInt a = boost::multiprecision::numerator(abs_of(x0.at(m)));
    result.stretch[m] = result.stretch[m - 1] + std::max<std::uint64_t>(a.convert_to<std::uint64_t>(), 1);
  }

  auto stretch_checked = [&](const RationalVector& y, const std::string& name) {
    RationalVector t = stretch_operator(result.stretch, y);
    if (l1_norm(t) != l1_norm(y) || summing_norm(t) != summing_norm(y))
      throw ReductionError("isometry", "T does not preserve the norms of " + name);
    return t;
  };
  const RationalVector X0 = stretch_checked(x0, "x_0");
  std::vector<RationalVector> X;
  std::uint64_t length = X0.support_end();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    X.push_back(stretch_checked(xs[i], "x_" + std::to_string(i + 1)));
    length = std::max(length, X.back().support_end());
  }
  if (length > kMaxStretch) throw ResourceError("stretched vectors exceed the dense reduction limit");

  const std::vector<Rational> dense0 = X0.to_dense(length);
  ZFamily& fam = result.family;
  fam.alpha = Rational(1) / (2 * C * C);
  fam.N = static_cast<std::uint64_t>(std::count_if(dense0.begin(), dense0.end(), [](const Rational& v) { return v != 0; }));
  if (Rational(fam.N) != norm0) throw ReductionError("suppz", "T x_0 is not a sign vector");
  Rational worst = 0;
  for (const auto& Xi : X) {
    const std::vector<Rational> dense = Xi.to_dense(length);
    std::vector<Rational> z;
    z.reserve(fam.N);
    Rational error = 0;
    for (std::uint64_t m = 0; m < length; ++m) {
      const int s0 = sign_of(dense0[m]);
      const Rational& x = dense[m];
      if (s0 == 0) {
        error += abs_of(x);  // D_i
        continue;
      }
      if (sign_of(x) != s0) {
        z.push_back(0);  // C_i
        error += abs_of(x);
      } else if (abs_of(x) <= 1) {
        z.push_back(x);  // A_i
      } else {
        z.push_back(dense0[m]);  // B_i
        error += abs_of(x) - 1;
      }
    }
    worst = std::max(worst, error);
    fam.z.push_back(std::move(z));
  }
  result.eta = worst / norm0;

  const ZFamilyCheck check = validate_zfamily(fam);
  if (!check.suppz) throw ReductionError("suppz", check.witness);
  if (!check.zdiff) throw ReductionError("zdiff", check.witness);
  if (!check.lfarz) throw ReductionError("lfarz", check.witness);
  if (!check.alphaN) throw ReductionError("alphaN", check.witness);
  return result;
}

std::uint64_t r_index(const ZFamily& z, std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("r(i,j) needs i != j");
  if (i < 1 || j < 1 || i > z.k() || j > z.k()) throw DomainError("index outside 1..k");
  const Rational aN = z.alphaN();
  const auto& a = z.z[i - 1];
  const auto& b = z.z[j - 1];
  if (a.size() != z.N || b.size() != z.N) throw DomainError("vectors are not indexed by 1..N");
  Rational prefix = 0;
  for (std::uint64_t m = 0; m < z.N; ++m) {
    prefix += a[m] - b[m];
    const Rational s = abs_of(prefix);
    if (s >= aN) {
      if (s >= aN + 1)
        throw DomainError("prefix sum jumps past [alpha N, alpha N + 1) at r = " + std::to_string(m + 1));
      return m + 1;
    }
  }
  throw DomainError("no prefix of z_" + std::to_string(i) + " - z_" + std::to_string(j) + " reaches alpha N");
}

RTable make_rtable(std::size_t k, const Rational& alphaN) {
  RTable t;
  t.k = k;
  t.alphaN = alphaN;
  t.r.assign(k * k, 0);
  return t;
}

RTable r_table(const ZFamily& z) {
  RTable t = make_rtable(z.k(), z.alphaN());
  for (std::size_t i = 1; i <= z.k(); ++i)
    for (std::size_t j = i + 1; j <= z.k(); ++j) t.set(i, j, r_index(z, i, j));
  return t;
}

std::string color_name(TripleColor c) {
  switch (c) {
    case TripleColor::red:
      return "red";
    case TripleColor::blue:
      return "blue";
    case TripleColor::green:
      return "green";
  }
  return "?";
}

TripleColor color_from_indices(std::uint64_t rij, std::uint64_t ril, std::uint64_t rjl) {
  const std::uint64_t M = std::max({rij, ril, rjl});
  if (M == rjl) return TripleColor::red;
  if (M == rij) return TripleColor::blue;  // rij > rjl since M != rjl
  return TripleColor::green;               // ril strictly above both
}

TripleColor color_triple(const RTable& t, std::size_t i, std::size_t j, std::size_t l) {
  if (!(1 <= i && i < j && j < l && l <= t.k)) throw DomainError("color_triple needs 1 <= i < j < l <= k");
  return color_from_indices(t.at(i, j), t.at(i, l), t.at(j, l));
}

TripleColor color_triple(const ZFamily& z, std::size_t i, std::size_t j, std::size_t l) {
  if (!(1 <= i && i < j && j < l && l <= z.k())) throw DomainError("color_triple needs 1 <= i < j < l <= k");
  return color_from_indices(r_index(z, i, j), r_index(z, i, l), r_index(z, j, l));
}

SeparationResult verify_triple_separation(const RTable& t, std::size_t i, std::size_t j, std::size_t l) {
  if (i == j || i == l || j == l) throw DomainError("separation needs pairwise distinct indices");
  const std::uint64_t a = t.at(i, j), b = t.at(i, l), c = t.at(j, l);
  SeparationResult out;
  out.gap = std::max({a, b, c}) - std::min({a, b, c});
  out.required = (t.alphaN - 1) / 2;
  out.pass = Rational(out.gap) >= out.required;
  return out;
}

SeparationResult verify_triple_separation(const ZFamily& z, std::size_t i, std::size_t j, std::size_t l) {
  if (i == j || i == l || j == l) throw DomainError("separation needs pairwise distinct indices");
  RTable t = make_rtable(z.k(), z.alphaN());
  t.set(i, j, r_index(z, i, j));
  t.set(i, l, r_index(z, i, l));
  t.set(j, l, r_index(z, j, l));
  return verify_triple_separation(t, i, j, l);
}

ChainReport monochromatic_chain_check(const RTable& t, std::span<const std::size_t> B, TripleColor color,
                                      const Rational& alpha) {
  if (alpha <= 0) throw DomainError("alpha must be positive");
  for (std::size_t q = 0; q < B.size(); ++q) {
    if (B[q] < 1 || B[q] > t.k) throw DomainError("index outside 1..k");
    if (q > 0 && B[q] <= B[q - 1]) throw PreconditionError("B must be listed in increasing order");
  }
  for (std::size_t a = 0; a < B.size(); ++a)
    for (std::size_t b = a + 1; b < B.size(); ++b)
      for (std::size_t c = b + 1; c < B.size(); ++c)
        if (color_triple(t, B[a], B[b], B[c]) != color)
          throw PreconditionError("triple (" + std::to_string(B[a]) + "," + std::to_string(B[b]) + "," +
                                  std::to_string(B[c]) + ") is not " + color_name(color));

  ChainReport report;
  const Rational h = (t.alphaN - 1) / 2;
  const std::size_t s = B.size();
  std::vector<std::size_t> order(B.begin(), B.end());
  if (color == TripleColor::blue) std::reverse(order.begin(), order.end());
  // Positions are 1-based as b_1, ..., b_s.
  auto check = [&](std::size_t q_pos, std::size_t t_pos, std::uint64_t factor) {
    ++report.inequalities;
    const std::uint64_t r = t.at(order[q_pos - 1], order[t_pos - 1]);
    const Rational need = Rational(factor) * h;
    if (Rational(r) < need && report.chain) {
      report.chain = false;
      report.witness = "(b_" + std::to_string(q_pos) + ",b_" + std::to_string(t_pos) + ") = " +
                       pair_text(order[q_pos - 1], order[t_pos - 1]) + ": r = " + std::to_string(r) + " < " +
                       fraction_string(need);
    }
  };
  if (color == TripleColor::green) {
    if (s >= 2) {
      const int cap = floor_log2(s) - 1;
      for (std::size_t a = 1; a <= s; ++a)
        for (std::size_t b = a + 1; b <= s; ++b) {
          const int q = std::min(floor_log2(b - a), cap);
          check(a, b, static_cast<std::uint64_t>(q + 2));
        }
    }
    const BigInt e = ceil_of(Rational(4) / alpha);
    report.size = e >= 63 || s <= (std::uint64_t{1} << e.convert_to<unsigned>());
  } else {
    for (std::size_t q = 1; q < s; ++q)
      for (std::size_t u = q + 1; u <= s; ++u) check(q, u, q + 1);
    report.size = BigInt(s) <= floor_of(Rational(4) / alpha);
  }
  if (!report.size && report.witness.empty())
    report.witness = "|B| = " + std::to_string(s) + " exceeds the size bound";
  return report;
}

ZFamily random_zfamily(std::mt19937_64& rng, std::uint64_t max_N, std::size_t min_k, std::size_t max_k) {
  if (max_N < 2 || min_k < 2 || max_k < min_k) throw DomainError("random_zfamily needs max_N >= 2, 2 <= min_k <= max_k");
  std::uniform_int_distribution<std::uint64_t> pick_N(std::min<std::uint64_t>(8, max_N), max_N);
  std::uniform_int_distribution<std::size_t> pick_k(min_k, max_k);
  std::uniform_int_distribution<int> coin(0, 1), step(0, 2);
  for (;;) {
    const std::uint64_t N = pick_N(rng);
    const std::size_t k = pick_k(rng);
    // Values are kept doubled so that everything stays integral.
    std::vector<std::vector<int>> twice(k, std::vector<int>(N));
    for (std::uint64_t m = 0; m < N; ++m) {
      const int base = coin(rng) ? -2 : 0;
      for (std::size_t i = 0; i < k; ++i) twice[i][m] = base + step(rng);
    }
    int least = -1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        int prefix = 0, best = 0;
        for (std::uint64_t m = 0; m < N; ++m) {
          prefix += twice[i][m] - twice[j][m];
          best = std::max(best, std::abs(prefix));
        }
        least = least < 0 ? best : std::min(least, best);
      }
    // Summing distances are least / 2; alpha N must be at least 2.
    if (least < 4) continue;
    std::uniform_int_distribution<int> pick_aN(4, least);
    const int aN_twice = pick_aN(rng);
    ZFamily z;
    z.N = N;
    z.alpha = Rational(aN_twice, 2 * static_cast<long long>(N));
    if (z.alpha >= 1) continue;
    for (const auto& row : twice) {
      std::vector<Rational> values;
      values.reserve(N);
      for (int v : row) values.emplace_back(v, 2);
      z.z.push_back(std::move(values));
    }
    return z;
  }
}

}  // namespace esa

namespace esa {

namespace {

// Smallest a >= 0 with a^2 >= x.
BigInt ceil_sqrt(const Rational& x) {
  const BigInt c = ceil_of(x);
  if (c <= 0) return 0;
  BigInt a = boost::multiprecision::sqrt(c);
  while (a * a < c) ++a;
  return a;
}

// Some rational C > 1 with lo <= C^2 <= hi, smallest denominator first.
std::optional<Rational> rational_between_squares(const Rational& lo, const Rational& hi) {
  if (lo > hi) return std::nullopt;
  if (lo == hi) {
    // A single point: C exists only when numerator and denominator are squares.
    const BigInt p = ceil_sqrt(Rational(boost::multiprecision::numerator(lo)));
    const BigInt q = ceil_sqrt(Rational(boost::multiprecision::denominator(lo)));
    const Rational C(p, q);
    if (C > 1 && C * C == lo) return C;
    return std::nullopt;
  }
  for (long long q = 1; q <= 1000; ++q) {
    const Rational q2(q * q);
    const BigInt a = ceil_sqrt(lo * q2);
    const Rational C(a, BigInt(q));
    if (C > 1 && C * C <= hi) return C;
  }
  return std::nullopt;
}

}  // namespace

ReductionInput synthesize_reduction_input(const ZFamily& z, std::mt19937_64& rng) {
  const std::size_t k = z.k();
  if (k < 2) throw DomainError("the family needs at least two vectors");
  // Smallest pairwise summing distance.
  Rational least = -1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Rational prefix = 0, best = 0;
      for (std::uint64_t m = 0; m < z.N; ++m) {
        prefix += z.z[i][m] - z.z[j][m];
        best = std::max(best, abs_of(prefix));
      }
      least = least < 0 ? best : std::min(least, best);
    }
  if (least < 2) throw DomainError("summing distances below 2 leave no room for alpha N");
  const Rational N(z.N);
  const auto C = rational_between_squares(N / (2 * least), N / 4);
  if (!C) throw DomainError("no rational C with small denominator fits the family");

  std::vector<int> sign(z.N);
  std::uniform_int_distribution<int> quarter(0, 3), coin(0, 1);
  for (std::uint64_t m = 0; m < z.N; ++m) {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (abs_of(z.z[i][m]) > 1) throw DomainError("coordinates must lie in [-1, 1]");
      pos = pos || z.z[i][m] > 0;
      neg = neg || z.z[i][m] < 0;
    }
    if (pos && neg) throw DomainError("column " + std::to_string(m + 1) + " mixes signs");
    sign[m] = pos ? 1 : (neg ? -1 : (coin(rng) ? 1 : -1));
  }

  ReductionInput in;
  in.C = *C;
  in.z = z.z;
  in.xs.resize(k);
  std::vector<Rational> error(k, 0);
  std::uint64_t pos = 1;
  std::uint64_t m = 0;
  while (m < z.N) {
    if (quarter(rng) == 0) {
      // A zero coordinate of x_0: everything the x_i put there lies in D.
      for (std::size_t i = 0; i < k; ++i) {
        const Rational v(quarter(rng) - 1, 2);  // -1/2 .. 1
        in.xs[i].append(pos, 1, v);
        error[i] += abs_of(v);
      }
      ++pos;
      continue;
    }
    // Group identical columns of the same sign into one coordinate of x_0.
    std::uint64_t g = 1;
    const std::uint64_t want = 1 + static_cast<std::uint64_t>(quarter(rng) % 3);
    while (g < want && m + g < z.N && sign[m + g] == sign[m]) {
      bool same = true;
      for (std::size_t i = 0; i < k && same; ++i) same = z.z[i][m + g] == z.z[i][m];
      if (!same) break;
      ++g;
    }
    const Rational s(sign[m]);
    in.x0.append(pos, 1, s * Rational(g));
    for (std::size_t i = 0; i < k; ++i) {
      Rational v = z.z[i][m];
      if (abs_of(v) == 1 && quarter(rng) == 0) {
        const Rational delta(1 + coin(rng), 2);
        v = s * (1 + delta);  // B_i
        error[i] += delta * Rational(g);
      } else if (v == 0 && quarter(rng) == 0) {
        const Rational delta(1 + coin(rng), 2);
        v = -s * delta;  // C_i
        error[i] += delta * Rational(g);
      }
      in.xs[i].append(pos, 1, v * Rational(g));
    }
    ++pos;
    m += g;
  }
  in.eta = *std::max_element(error.begin(), error.end()) / N;
  return in;
}

}  // namespace esa
