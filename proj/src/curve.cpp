#include "galcensus/curve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "galcensus/errors.hpp"
#include "galcensus/poly.hpp"
#include "galcensus/resolvent.hpp"
#include "galcensus/roots.hpp"

namespace galcensus {

// ---------------------------------------------------------------------------
// PlaneCurve

PlaneCurve PlaneCurve::from_monomials(std::vector<Monomial> monomials) {
  PlaneCurve f;
  for (auto& m : monomials) {
    if (m.e1 < 0 || m.e2 < 0) throw InvalidInput("curve exponents must be nonnegative");
    if (sgn(m.c) == 0) throw InvalidInput("curve monomials must have nonzero coefficients");
  }
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) { return std::pair(a.e1, a.e2) < std::pair(b.e1, b.e2); });
  for (std::size_t i = 1; i < monomials.size(); ++i)
    if (monomials[i].e1 == monomials[i - 1].e1 && monomials[i].e2 == monomials[i - 1].e2)
      throw InvalidInput("duplicate exponent pair in curve");
  f.m_ = std::move(monomials);
  return f;
}

PlaneCurve PlaneCurve::parse(std::string_view text) {
  std::vector<Monomial> ms;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t semi = text.find(';', start);
    if (semi == std::string_view::npos) semi = text.size();
    const std::string part(text.substr(start, semi - start));
    start = semi + 1;
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> fields;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    if (fields.size() != 3) throw InvalidInput("curve term must be 'e1,e2,c': " + part);
    try {
      ms.push_back({std::stoi(fields[0]), std::stoi(fields[1]), parse_bigint(fields[2])});
    } catch (const std::logic_error&) {
      throw InvalidInput("malformed curve term: " + part);
    }
  }
  return from_monomials(std::move(ms));
}

int PlaneCurve::degree() const {
  int d = -1;
  for (const auto& m : m_) d = std::max(d, m.e1 + m.e2);
  return d;
}

int PlaneCurve::degree_x1() const {
  int d = -1;
  for (const auto& m : m_) d = std::max(d, m.e1);
  return d;
}

BigInt PlaneCurve::evaluate(const BigInt& x1, const BigInt& x2) const {
  BigInt s = 0;
  for (const auto& m : m_) {
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), x1.get_mpz_t(), static_cast<unsigned long>(m.e1));
    mpz_pow_ui(b.get_mpz_t(), x2.get_mpz_t(), static_cast<unsigned long>(m.e2));
    s += m.c * a * b;
  }
  return s;
}

std::string PlaneCurve::to_string() const {
  std::string out;
  for (const auto& m : m_) {
    if (!out.empty()) out += ';';
    out += std::to_string(m.e1) + "," + std::to_string(m.e2) + "," + galcensus::to_string(m.c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting

namespace {

IntPolynomial specialize(const PlaneCurve& f, long long x2) {
  const int d = std::max(f.degree_x1(), 0);
  std::vector<BigInt> c(static_cast<std::size_t>(d + 1), BigInt(0));
  const BigInt v(static_cast<long>(x2));
  for (const auto& m : f.monomials()) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m.e2));
    c[static_cast<std::size_t>(m.e1)] += m.c * p;
  }
  return IntPolynomial::from_constant_first(std::move(c));
}

}  // namespace

PointCount count_integer_points(const PlaneCurve& f, long long p1, long long p2, std::uint64_t row_ceiling, int jobs) {
  if (p1 < 1 || p2 < 1) throw InvalidInput("count_integer_points needs P1, P2 >= 1");
  const std::uint64_t rows = static_cast<std::uint64_t>(2 * p2 + 1);
  if (rows > row_ceiling)
    throw CeilingExceeded("point count needs " + std::to_string(rows) + " rows, above the ceiling of " +
                              std::to_string(row_ceiling),
                          rows);
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(rows)));
  std::vector<PointCount> part(static_cast<std::size_t>(workers));
  std::atomic<long long> next{-p2};
  constexpr long long kChunk = 64;
  auto work = [&](int w) {
    PointCount& pc = part[static_cast<std::size_t>(w)];
    while (true) {
      const long long lo = next.fetch_add(kChunk);
      if (lo > p2) return;
      for (long long x2 = lo; x2 < lo + kChunk && x2 <= p2; ++x2) {
        const IntPolynomial g = specialize(f, x2);
        if (g.is_zero()) {
          pc.count += static_cast<std::uint64_t>(2 * p1 + 1);
          pc.zero_rows.push_back(x2);
          continue;
        }
        if (g.degree() == 0) continue;
        for (const auto& z : integer_roots(g))
          if (abs(z) <= static_cast<long>(p1)) ++pc.count;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  PointCount out;
  for (auto& pc : part) {
    out.count += pc.count;
    out.zero_rows.insert(out.zero_rows.end(), pc.zero_rows.begin(), pc.zero_rows.end());
  }
  std::sort(out.zero_rows.begin(), out.zero_rows.end());
  return out;
}

BigInt monomial_T(const PlaneCurve& f, long long p1, long long p2) {
  if (f.is_zero()) throw InvalidInput("monomial_T of the zero curve");
  BigInt best = 0;
  const BigInt a(static_cast<long>(p1)), b(static_cast<long>(p2));
  for (const auto& m : f.monomials()) {
    BigInt x, y;
    mpz_pow_ui(x.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m.e1));
    mpz_pow_ui(y.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(m.e2));
    BigInt v = x * y;
    if (v > best) best = v;
  }
  return best;
}

namespace {

double log_bigint(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

BoundRatio bound_ratio(const PlaneCurve& f, long long p1, long long p2, double eps) {
  BoundRatio r;
  r.t = monomial_T(f, p1, p2);
  if (r.t <= 1) throw UndefinedBound("bound_ratio needs T > 1, got T = " + to_string(r.t));
  r.n = count_integer_points(f, p1, p2).count;
  const double lp1 = std::log(static_cast<double>(p1)), lp2 = std::log(static_cast<double>(p2));
  r.rhs = std::pow(static_cast<double>(std::max(p1, p2)), eps) * std::exp(lp1 * lp2 / log_bigint(r.t));
  r.ratio = static_cast<double>(r.n) / r.rhs;
  return r;
}

// ---------------------------------------------------------------------------
// Resolvent curve experiment

std::vector<std::vector<long long>> sample_prefixes(int n, std::size_t count, long long bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-bound, bound);
  std::vector<std::vector<long long>> out(count);
  for (auto& p : out)
    for (int i = 0; i < n - 1; ++i) p.push_back(dist(rng));
  return out;
}

namespace {

// Integer polynomial through (t_i, v_i), or nullopt when the Newton form has a
// non-integer coefficient. Constant-first coefficients.
std::optional<std::vector<BigInt>> interpolate(const std::vector<long long>& t, const std::vector<BigInt>& v) {
  const std::size_t k = t.size();
  std::vector<mpq_class> dd(v.begin(), v.end());
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(static_cast<long>(t[i] - t[i - j]));
      if (i == j) break;
    }
  // expand Newton form
  std::vector<mpq_class> poly{dd[k - 1]};
  for (std::size_t j = k - 1; j-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * mpq_class(static_cast<long>(t[j]));
    }
    next[0] += dd[j];
    poly = std::move(next);
  }
  std::vector<BigInt> out;
  for (auto& q : poly) {
    q.canonicalize();
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  while (out.size() > 1 && sgn(out.back()) == 0) out.pop_back();
  return out;
}

BigInt eval_at(const std::vector<BigInt>& c, long long t) {
  BigInt s = 0;
  const BigInt x(static_cast<long>(t));
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

PrefixResult run_prefix(int id, int n, const PermGroup& g, const std::vector<long long>& prefix,
                        const std::vector<long long>& heights, const ExperimentOptions& opt) {
  PrefixResult pr;
  pr.prefix_id = id;
  pr.prefix = prefix;
  const GenericCheck gc = generic_group_check(n, prefix, g, opt.sample_budget);
  pr.generic = gc.outcome == Genericity::certified_generic_Sn;
  pr.witness_t = gc.witness_t;
  if (!pr.generic) return pr;

  const long long hmax = heights.back();
  const int m = static_cast<int>(index_and_delta(g).index);
  std::vector<long long> ts;
  std::vector<std::vector<BigInt>> coeff_rows;  // per row, constant-first Phi coefficients
  std::vector<std::uint64_t> row_points;
  std::vector<double> row_bound;
  for (long long t = -hmax; t <= hmax; ++t) {
    std::vector<long long> tail = prefix;
    tail.push_back(t);
    const Resolvent phi = galois_resolvent(IntPolynomial::monic_from_tail(tail), g);
    const double rb = root_bound(phi.coefficients);
    std::uint64_t pts = 0;
    for (const auto& z : integer_root_test(phi)) {
      if (sgn(evaluate(phi.coefficients, z)) != 0) pr.points_verified = false;
      if (std::fabs(z.get_d()) > rb) pr.points_verified = false;
      ++pts;
    }
    ts.push_back(t);
    coeff_rows.push_back(phi.coefficients.constant_first());
    row_points.push_back(pts);
    row_bound.push_back(rb);
  }

  // Phi(z, t) = sum_k b_k(t) z^k with deg b_k <= floor((m - k) n(n+1)/2 / n).
  const int weight = n * (n + 1) / 2;
  std::vector<Monomial> monos;
  for (int k = 0; k <= m; ++k) {
    const int dk = (m - k) * weight / n;
    if (dk + 1 > static_cast<int>(ts.size()))
      throw InsufficientData("curve interpolation needs at least " + std::to_string(dk + 1) + " rows");
    std::vector<BigInt> vals;
    for (const auto& row : coeff_rows) vals.push_back(row[static_cast<std::size_t>(k)]);
    std::vector<long long> tfit(ts.begin(), ts.begin() + dk + 1);
    std::vector<BigInt> vfit(vals.begin(), vals.begin() + dk + 1);
    auto b = interpolate(tfit, vfit);
    if (!b) throw Error("resolvent coefficient is not an integer polynomial in the constant term");
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (eval_at(*b, ts[i]) != vals[i]) throw Error("resolvent coefficient exceeds its degree bound in a_n");
    for (std::size_t e = 0; e < b->size(); ++e)
      if (sgn((*b)[e]) != 0) monos.push_back({k, static_cast<int>(e), (*b)[e]});
  }
  pr.curve = PlaneCurve::from_monomials(std::move(monos));

  for (long long H : heights) {
    std::uint64_t count = 0;
    double bound = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (std::llabs(ts[i]) > H) continue;
      count += row_points[i];
      bound = std::max(bound, row_bound[i]);
    }
    const long long p1 = std::max<long long>(std::max<long long>(H, 1), static_cast<long long>(std::ceil(bound)));
    const PointCount pc = count_integer_points(pr.curve, p1, std::max<long long>(H, 1));
    if (pc.count != count) pr.curve_consistent = false;
    pr.zero_rows += pc.zero_rows.size();
    pr.counts.push_back(count);
    pr.p1.push_back(p1);
  }
  std::vector<std::pair<double, double>> pts;
  pr.shifted = std::any_of(pr.counts.begin(), pr.counts.end(), [](std::uint64_t c) { return c == 0; });
  for (std::size_t i = 0; i < heights.size(); ++i)
    pts.emplace_back(static_cast<double>(heights[i]), static_cast<double>(pr.counts[i]) + (pr.shifted ? 1.0 : 0.0));
  pr.fit = fit_exponent(pts);
  return pr;
}

}  // namespace

CurveExperiment resolvent_curve_experiment(int n, const PermGroup& g, const std::vector<std::vector<long long>>& prefixes,
                                           const std::vector<long long>& heights_in, const ExperimentOptions& opt) {
  if (g.degree() != n) throw InvalidInput("group degree differs from n");
  if (n > 5) throw UnsupportedError("the resolvent curve experiment supports n <= 5");
  std::vector<long long> heights = heights_in;
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  if (heights.size() < 3) throw InsufficientData("the experiment needs at least 3 heights");
  if (heights.front() < 1) throw InvalidInput("heights must be positive");

  CurveExperiment ex;
  ex.n = n;
  ex.group = g.name().empty() ? g.generators_text() : g.name();
  ex.m = index_and_delta(g).index;
  ex.heights = heights;

  std::vector<PrefixResult> results(prefixes.size());
  std::vector<std::exception_ptr> errors(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      try {
        results[i] = run_prefix(static_cast<int>(i), n, g, prefixes[i], heights, opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(opt.jobs, static_cast<int>(prefixes.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& r : results) {
    if (opt.max_prefixes && ex.prefixes.size() >= opt.max_prefixes) break;
    if (!r.generic) {
      std::string p;
      for (long long a : r.prefix) p += (p.empty() ? "" : ",") + std::to_string(a);
      ex.notices.push_back("prefix " + std::to_string(r.prefix_id) + " (" + p +
                           ") skipped: genericity not certified within the sample budget");
      continue;
    }
    for (std::size_t i = 0; i < heights.size(); ++i) {
      CurveRow row;
      row.prefix_id = r.prefix_id;
      row.H = heights[i];
      row.p1 = r.p1[i];
      row.p2 = heights[i];
      row.n = r.counts[i];
      row.t = monomial_T(r.curve, row.p1, row.p2);
      row.slope = r.fit.slope;
      ex.rows.push_back(std::move(row));
    }
    ex.prefixes.push_back(std::move(r));
  }

  // alpha: growth of P1 against H over all generic prefixes
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : ex.prefixes)
    for (std::size_t i = 0; i < heights.size(); ++i)
      pts.emplace_back(std::log(static_cast<double>(heights[i])), std::log(static_cast<double>(r.p1[i])));
  if (pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double k = static_cast<double>(pts.size());
    const double den = k * sxx - sx * sx;
    if (den > 0) ex.alpha = std::max(1.0, (k * sxy - sx * sy) / den);
  }
  return ex;
}

std::string experiment_csv(const CurveExperiment& e) {
  std::ostringstream os;
  os << "prefix_id,H,N,T,slope\n";
  char buf[64];
  for (const auto& r : e.rows) {
    std::snprintf(buf, sizeof buf, "%.6f", std::fabs(r.slope) < 5e-7 ? 0.0 : r.slope);
    os << r.prefix_id << ',' << r.H << ',' << r.n << ',' << to_string(r.t) << ',' << buf << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const CurveExperiment& e) {
  nlohmann::json j;
  j["n"] = e.n;
  j["group"] = e.group;
  j["m"] = e.m;
  j["alpha"] = e.alpha;
  j["heights"] = e.heights;
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& p : e.prefixes) {
    ps.push_back({{"prefix_id", p.prefix_id},
                  {"prefix", p.prefix},
                  {"witness_t", p.witness_t},
                  {"curve", p.curve.to_string()},
                  {"counts", p.counts},
                  {"p1", p.p1},
                  {"fit", to_json(p.fit)},
                  {"shifted", p.shifted},
                  {"curve_consistent", p.curve_consistent},
                  {"points_verified", p.points_verified},
                  {"zero_rows", p.zero_rows}});
  }
  j["prefixes"] = ps;
  j["notices"] = e.notices;
  return j;
}

}  // namespace galcensus
