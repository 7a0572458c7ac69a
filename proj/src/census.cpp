#include "galcensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "galcensus/errors.hpp"

namespace galcensus {

namespace {

// Per-height tally of one label: count and weakest certainty.
struct Cell {
  std::uint64_t count = 0;
  Certainty floor = Certainty::exact;
};

using Tally = std::map<std::string, std::vector<Cell>>;  // label -> cells by exact height

void merge_into(Tally& dst, const Tally& src) {
  for (const auto& [label, cells] : src) {
    auto& d = dst[label];
    if (d.size() < cells.size()) d.resize(cells.size());
    for (std::size_t h = 0; h < cells.size(); ++h) {
      d[h].count += cells[h].count;
      d[h].floor = std::max(d[h].floor, cells[h].floor);
    }
  }
}

std::uint64_t checked_power(std::uint64_t base, int k, std::uint64_t ceiling, const std::string& what) {
  long double approx = std::pow(static_cast<long double>(base), k);
  if (approx > static_cast<long double>(ceiling)) {
    const unsigned long long need =
        approx > 1.8e19L ? ~0ull : static_cast<unsigned long long>(std::ceil(approx));
    throw CeilingExceeded(what + " needs " + std::to_string(need) + " polynomials, above the work ceiling of " +
                              std::to_string(ceiling),
                          need);
  }
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

std::vector<long long> normalized_heights(const std::vector<long long>& heights) {
  if (heights.empty()) throw InvalidInput("height list is empty");
  std::vector<long long> h = heights;
  for (long long x : h)
    if (x < 0) throw InvalidInput("heights must be nonnegative");
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return h;
}

// Labels every point of the box [-hmax, hmax]^k once. The label function
// receives the coordinate vector and returns (label, certainty).
template <class LabelFn>
std::vector<CensusRecord> run_box(int n, int k, const std::vector<long long>& heights_in, const CensusOptions& opt,
                                  const std::string& what, LabelFn label_fn) {
  const std::vector<long long> heights = normalized_heights(heights_in);
  const long long hmax = heights.back();
  const std::uint64_t side = static_cast<std::uint64_t>(2 * hmax + 1);
  const std::uint64_t total = checked_power(side, k, opt.work_ceiling, what);
  const int shards = std::max(1, opt.shards);
  const int jobs = std::max(1, std::min(opt.jobs, shards));

  std::vector<Tally> parts(static_cast<std::size_t>(shards));
  std::atomic<int> next{0};
  auto worker = [&] {
    std::vector<long long> a(static_cast<std::size_t>(k));
    while (true) {
      const int s = next.fetch_add(1);
      if (s >= shards) return;
      const std::uint64_t begin = total / shards * s + std::min<std::uint64_t>(s, total % shards);
      const std::uint64_t end = begin + total / shards + (static_cast<std::uint64_t>(s) < total % shards ? 1 : 0);
      // decode begin; a[0] is the most significant digit
      std::uint64_t idx = begin;
      for (int i = k - 1; i >= 0; --i) {
        a[i] = static_cast<long long>(idx % side) - hmax;
        idx /= side;
      }
      Tally& tally = parts[static_cast<std::size_t>(s)];
      std::string last_label;
      std::vector<Cell>* cells = nullptr;
      for (std::uint64_t i = begin; i < end; ++i) {
        long long h = 0;
        for (long long x : a) h = std::max(h, std::llabs(x));
        auto [label, cert] = label_fn(a);
        if (!cells || label != last_label) {
          cells = &tally[label];
          if (cells->size() < static_cast<std::size_t>(hmax + 1)) cells->resize(static_cast<std::size_t>(hmax + 1));
          last_label = label;
        }
        Cell& c = (*cells)[static_cast<std::size_t>(h)];
        ++c.count;
        c.floor = std::max(c.floor, cert);
        // odometer increment
        for (int j = k - 1; j >= 0; --j) {
          if (a[j] < hmax) {
            ++a[j];
            break;
          }
          a[j] = -hmax;
        }
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  Tally merged;
  for (const auto& p : parts) merge_into(merged, p);

  std::vector<CensusRecord> out;
  for (long long H : heights) {
    const std::uint64_t tot = checked_power(static_cast<std::uint64_t>(2 * H + 1), k, ~0ull, what);
    for (const auto& [label, cells] : merged) {
      CensusRecord r{n, H, label, 0, tot, Certainty::exact};
      for (long long h = 0; h <= H && h < static_cast<long long>(cells.size()); ++h) {
        r.count += cells[static_cast<std::size_t>(h)].count;
        if (cells[static_cast<std::size_t>(h)].count) r.certainty_floor = std::max(r.certainty_floor, cells[h].floor);
      }
      if (r.count) out.push_back(r);
    }
  }
  return out;
}

}  // namespace

std::vector<CensusRecord> census_full(int n, const std::vector<long long>& heights, const CensusOptions& options) {
  if (n < 1) throw InvalidInput("census degree must be >= 1");
  if (n > 10) throw UnsupportedError("census supports n <= 10");
  const int budget = options.prime_budget;
  return run_box(n, n, heights, options, "census_full(n=" + std::to_string(n) + ")",
                 [budget](const std::vector<long long>& a) {
                   GaloisLabel l = identify(IntPolynomial::monic_from_tail(a), budget);
                   return std::pair<std::string, Certainty>(l.key(), l.certainty);
                 });
}

std::pair<std::string, Certainty> classify_trinomial(int n, int r, long long a, long long b, int prime_budget) {
  namespace tl = trinomial_label;
  std::vector<long long> tail(static_cast<std::size_t>(n), 0);
  tail[static_cast<std::size_t>(r - 1)] += a;
  tail[static_cast<std::size_t>(n - 1)] += b;
  const IntPolynomial f = IntPolynomial::monic_from_tail(tail);
  if (!integer_roots(f).empty()) return {tl::integer_zero, Certainty::exact};
  if (certify_Sn(f, prime_budget).certified) return {tl::certified_Sn, Certainty::certified};
  if (!factor_pattern(f).is_irreducible()) return {tl::reducible_no_linear, Certainty::exact};
  if (is_square_integer(discriminant(f))) return {tl::disc_square, Certainty::exact};
  if (n <= 5) {
    const GaloisLabel l = identify(f, prime_budget);
    if (l.kind == LabelKind::exact_group && l.group == "S" + std::to_string(n)) return {tl::certified_Sn, l.certainty};
    return {tl::other, l.certainty};
  }
  return {tl::indeterminate, Certainty::budget_limited};
}

std::vector<CensusRecord> census_trinomial(int n, int r, const std::vector<long long>& heights,
                                           const CensusOptions& options) {
  if (n > 10) throw UnsupportedError("trinomial census supports n <= 10");
  if (!(n > r && r >= 1)) throw PreconditionError("trinomial census needs n > r >= 1");
  if (std::gcd(n, r) != 1)
    throw PreconditionError("gcd(r, n) = " + std::to_string(std::gcd(n, r)) +
                            " != 1: the trinomial is then a polynomial in X^gcd, so its Galois group is never S_n");
  const int budget = options.prime_budget;
  return run_box(n, 2, heights, options, "census_trinomial(n=" + std::to_string(n) + ")",
                 [n, r, budget](const std::vector<long long>& c) { return classify_trinomial(n, r, c[0], c[1], budget); });
}

std::string census_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  os << "n,H,label,count,total,certainty_floor\n";
  for (const auto& r : records)
    os << r.n << ',' << r.H << ',' << r.label << ',' << r.count << ',' << r.total << ',' << to_string(r.certainty_floor)
       << '\n';
  return os.str();
}

std::vector<std::pair<long long, std::uint64_t>> series(const std::vector<CensusRecord>& records,
                                                        const std::string& label) {
  std::map<long long, std::uint64_t> m;
  for (const auto& r : records) {
    m.try_emplace(r.H, 0);
    if (r.label == label) m[r.H] += r.count;
  }
  return {m.begin(), m.end()};
}

std::vector<std::pair<long long, std::uint64_t>> complement_series(const std::vector<CensusRecord>& records,
                                                                   const std::vector<std::string>& excluded) {
  std::map<long long, std::uint64_t> m;
  for (const auto& r : records) {
    m.try_emplace(r.H, r.total);
    if (std::find(excluded.begin(), excluded.end(), r.label) != excluded.end()) m[r.H] -= r.count;
  }
  return {m.begin(), m.end()};
}

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& points) {
  ExponentFit fit;
  for (const auto& [h, c] : points)
    if (c > 0 && h > 0) fit.points.emplace_back(h, c);
  for (std::size_t i = 1; i < fit.points.size(); ++i)
    if (!(fit.points[i].first > fit.points[i - 1].first))
      throw InvalidInput("fit_exponent needs strictly increasing H");
  if (fit.points.size() < 3) throw InsufficientData("fit_exponent needs at least 3 points with positive counts");
  const double k = static_cast<double>(fit.points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [h, c] : fit.points) {
    const double x = std::log(h), y = std::log(c);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = k * sxx - sx * sx;
  fit.slope = (k * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / k;
  double ss = 0;
  for (const auto& [h, c] : fit.points) {
    const double e = std::log(c) - (fit.intercept + fit.slope * std::log(h));
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / k);
  const auto& p = fit.points[fit.points.size() - 2];
  const auto& q = fit.points.back();
  fit.tail_slope = std::log(q.second / p.second) / std::log(q.first / p.first);
  return fit;
}

ExponentFit fit_exponent(const std::vector<std::pair<long long, std::uint64_t>>& points) {
  std::vector<std::pair<double, double>> p;
  for (const auto& [h, c] : points) p.emplace_back(static_cast<double>(h), static_cast<double>(c));
  return fit_exponent(p);
}

namespace {

CompareRow make_row(const CompareInput& in, const std::string& reference, double bound, double tolerance) {
  CompareRow r;
  r.label = in.label;
  r.reference = reference;
  r.slope = in.fit.slope;
  r.bound = bound;
  r.margin = bound - in.fit.slope;
  r.pass = in.fit.slope <= bound + tolerance;
  return r;
}

}  // namespace

std::vector<CompareRow> compare_report(const std::vector<CompareInput>& fits, int n, double tolerance) {
  std::vector<CompareRow> rows;
  const std::string sn = "S" + std::to_string(n);
  for (const auto& in : fits) {
    if (in.label == "reducible") {
      rows.push_back(make_row(in, "chela n-1", n - 1, tolerance));
      rows.back().note = "asymptotic equality; only the upper side is checked";
    } else if (in.label == "non_Sn") {
      rows.push_back(make_row(in, "gallagher n-1/2", n - 0.5, tolerance));
      rows.back().note = "log factor ignored";
    } else if (in.label == "non_Sn_An") {
      if (n < 9) continue;
      rows.push_back(make_row(in, "index bound n-1+e(n)", n - 1 + e_n(n).get_d(), tolerance));
    } else if (in.label == sn || in.label == "certified_Sn") {
      rows.push_back(make_row(in, "trivial n", n, tolerance));
    } else if (in.label == "contained_in_An") {
      rows.push_back(make_row(in, "index bound n-1+1/2", n - 0.5, tolerance));
    } else if (n <= 5) {
      try {
        const auto& g = catalog_group(n, in.label);
        const double delta = index_and_delta(g.group).delta.get_d();
        rows.push_back(make_row(in, "index bound n-1+1/m", n - 1 + delta, tolerance));
      } catch (const InvalidInput&) {
        continue;
      }
    }
  }
  return rows;
}

std::vector<CompareRow> compare_report_trinomial(const std::vector<CompareInput>& fits, int n, double tolerance) {
  std::vector<CompareRow> rows;
  for (const auto& in : fits) {
    if (in.label == "not_certified_Sn") {
      rows.push_back(make_row(in, "trinomial 1+1/n", 1.0 + 1.0 / n, tolerance));
      rows.back().note = "proxy: certification is sound but incomplete, see indeterminate counts";
    } else if (in.label == trinomial_label::integer_zero) {
      rows.push_back(make_row(in, "trinomial 1+1/n", 1.0 + 1.0 / n, tolerance));
    }
  }
  return rows;
}

std::string compare_text(const std::vector<CompareRow>& rows) {
  std::ostringstream os;
  os << "label                 reference                 slope   bound   margin  pass\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-21s %-25s %6.3f  %6.3f  %6.3f  %s", r.label.c_str(), r.reference.c_str(),
                  r.slope, r.bound, r.margin, r.pass ? "yes" : "no");
    os << buf;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const ExponentFit& fit) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& [h, c] : fit.points) pts.push_back({h, c});
  return {{"points", pts},
          {"slope", fit.slope},
          {"intercept", fit.intercept},
          {"residual", fit.residual},
          {"tail_slope", fit.tail_slope}};
}

nlohmann::json to_json(const CompareRow& r) {
  return {{"label", r.label}, {"reference", r.reference}, {"slope", r.slope}, {"bound", r.bound},
          {"margin", r.margin}, {"pass", r.pass},           {"note", r.note}};
}

}  // namespace galcensus
