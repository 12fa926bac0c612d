#include "kemeny/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <thread>
#include <variant>

#include "kemeny/barbell.hpp"
#include "kemeny/canonical.hpp"
#include "kemeny/chain_matrices.hpp"
#include "kemeny/charpoly.hpp"
#include "kemeny/enumerate.hpp"
#include "kemeny/error.hpp"
#include "kemeny/graph6.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/report.hpp"

namespace kemeny {

namespace {

const ScalarPolicy kFloat{ScalarMode::floating, 0};
const ScalarPolicy kExactUncapped{ScalarMode::exact, std::numeric_limits<std::size_t>::max()};

std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

DiffSign classify(double k_e, double k_nb, double tol) {
  const double diff = k_nb - k_e;
  if (std::abs(diff) <= tol) return DiffSign::equal;
  return diff > 0 ? DiffSign::nb_larger_or_equal : DiffSign::nb_smaller;
}

/// tr((I - P_nb + J/N)^-1) - 1; P_nb is doubly stochastic, so pi is uniform.
double nb_kemeny_fast(const Graph& g, const OrientedEdgeIndex& idx) {
  const ChainMatrix p = nb_transition(g, idx, kFloat);
  const auto n = static_cast<Eigen::Index>(p.order());
  Eigen::MatrixXd a = -p.real();
  a.array() += 1.0 / static_cast<double>(n);
  a.diagonal().array() += 1.0;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  return lu.inverse().trace() - 1.0;
}

CensusRecord census_values(const Graph& g, const CensusOptions& options);

struct Rejection {
  CensusError detail;
};

using Outcome = std::variant<CensusRecord, Rejection, CensusError>;

struct Job {
  std::size_t line = 0;
  std::string text;
  std::optional<Graph> graph;
};

Outcome evaluate(const Job& job, const CensusOptions& options) {
  try {
    const Graph g = job.graph ? *job.graph : parse_graph6(job.text);
    if (auto why = census_rejection(g))
      return Rejection{{job.line, job.text.empty() ? to_graph6(g) : job.text, *why}};
    CensusRecord r = census_values(g, options);
    if (options.keep_records || r.nb_ge_e()) r.graph_id = canonical_graph6(g);
    return r;
  } catch (const Error& e) {
    return CensusError{job.line, job.text, e.what()};
  }
}

std::vector<Outcome> evaluate_batch(const std::vector<Job>& jobs, const CensusOptions& options) {
  std::vector<Outcome> out(jobs.size());
  std::size_t workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, jobs.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = evaluate(jobs[i], options);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) out[i] = evaluate(jobs[i], options);
    });
  pool.clear();
  return out;
}

class Accumulator {
 public:
  explicit Accumulator(const CensusOptions& options) : options_(options) {}

  void add(std::vector<Outcome> batch) {
    for (auto& o : batch) {
      if (auto* err = std::get_if<CensusError>(&o)) {
        result_.errors.push_back(std::move(*err));
        continue;
      }
      if (auto* rej = std::get_if<Rejection>(&o)) {
        result_.rejected.push_back(std::move(rej->detail));
        continue;
      }
      auto& r = std::get<CensusRecord>(o);
      ++result_.total;
      if (!uniform_seen_) {
        result_.n = r.n;
        uniform_seen_ = true;
      } else if (result_.n && *result_.n != r.n) {
        result_.n.reset();
      }
      if (r.nb_ge_e()) {
        ++result_.count_nb_ge_e;
        result_.nb_ge_e_list.push_back(r.graph_id);
        if (r.diff_sign == DiffSign::equal) result_.equal_list.push_back(r.graph_id);
      }
      if (options_.keep_records) result_.records.push_back(std::move(r));
    }
  }

  CensusResult finish() {
    std::sort(result_.records.begin(), result_.records.end(),
              [](const auto& a, const auto& b) { return a.graph_id < b.graph_id; });
    std::sort(result_.nb_ge_e_list.begin(), result_.nb_ge_e_list.end());
    std::sort(result_.equal_list.begin(), result_.equal_list.end());
    return std::move(result_);
  }

 private:
  CensusOptions options_;
  CensusResult result_;
  bool uniform_seen_ = false;
};

}  // namespace

std::string_view to_string(DiffSign sign) {
  switch (sign) {
    case DiffSign::nb_smaller: return "nb_smaller";
    case DiffSign::equal: return "equal";
    case DiffSign::nb_larger_or_equal: return "nb_larger_or_equal";
  }
  return "?";
}

std::optional<std::string> census_rejection(const Graph& g) {
  if (!is_connected(g)) return "graph is disconnected";
  if (g.min_degree() < 2)
    return "minimum degree " + std::to_string(g.min_degree()) + " < 2; P_nb is undefined";
  if (g.size() == g.order() && g.max_degree() == 2) return "graph is a cycle; P_nb is reducible";
  return std::nullopt;
}

CensusRecord census_record(const Graph& g, const CensusOptions& options) {
  CensusRecord r = census_values(g, options);
  r.graph_id = canonical_graph6(g);
  return r;
}

namespace {

/// Everything but the canonical id.
CensusRecord census_values(const Graph& g, const CensusOptions& options) {
  if (auto why = census_rejection(g)) throw ValidationError(*why);
  CensusRecord r;
  r.n = g.order();
  r.m = g.size();
  const double shift = 2.0 * static_cast<double>(r.m) - static_cast<double>(r.n);
  const double k_v = kemeny_spectrum(spectrum(vertex_transition(g, kFloat)));
  const OrientedEdgeIndex idx(g);
  r.k_e = k_v + shift;
  r.k_nb = nb_kemeny_fast(g, idx);

  if (std::abs(r.k_nb - r.k_e) < options.exact_window) {
    const Rational exact_v =
        kemeny_from_charpoly(charpoly_rational(vertex_transition(g, kExactUncapped).exact()));
    r.exact_e = exact_v + Rational(static_cast<long>(2 * r.m) - static_cast<long>(r.n));
    r.exact_nb = kemeny_from_charpoly(charpoly_rational(nb_transition(g, idx, kExactUncapped).exact()));
    r.k_e = to_double(*r.exact_e);
    r.k_nb = to_double(*r.exact_nb);
    const int s = sgn(Rational(*r.exact_nb - *r.exact_e));
    r.diff_sign = s == 0 ? DiffSign::equal : s > 0 ? DiffSign::nb_larger_or_equal : DiffSign::nb_smaller;
  } else {
    r.diff_sign = classify(r.k_e, r.k_nb, options.equal_tol);
  }
  return r;
}

}  // namespace

CensusResult census_nb_vs_edge(std::size_t n, const CensusOptions& options) {
  const auto graphs = enumerate_graphs(n, 2, true);
  Accumulator acc(options);
  std::vector<Job> jobs;
  for (const auto& g : graphs) {
    jobs.push_back(Job{0, {}, g});
    if (jobs.size() == options.batch) {
      acc.add(evaluate_batch(jobs, options));
      jobs.clear();
    }
  }
  acc.add(evaluate_batch(jobs, options));
  return acc.finish();
}

CensusResult census_nb_vs_edge(std::istream& in, const CensusOptions& options) {
  Accumulator acc(options);
  std::vector<Job> jobs;
  std::string line;
  std::size_t line_no = 0;
  while (read_graph6_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    jobs.push_back(Job{line_no, line, std::nullopt});
    if (jobs.size() == options.batch) {
      acc.add(evaluate_batch(jobs, options));
      jobs.clear();
    }
  }
  acc.add(evaluate_batch(jobs, options));
  return acc.finish();
}

void write_census_csv(std::ostream& out, const CensusResult& result) {
  out << "graph6,n,m,k_e,k_nb,diff_sign\n";
  for (const auto& r : result.records) {
    out << r.graph_id << ',' << r.n << ',' << r.m << ','
        << (r.exact_e ? to_string(*r.exact_e) : format12(r.k_e)) << ','
        << (r.exact_nb ? to_string(*r.exact_nb) : format12(r.k_nb)) << ',' << to_string(r.diff_sign)
        << '\n';
  }
}

nlohmann::json census_summary(const CensusResult& result) {
  nlohmann::json j;
  j["n"] = result.n ? nlohmann::json(*result.n) : nlohmann::json(nullptr);
  j["total"] = result.total;
  j["count_nb_ge_e"] = result.count_nb_ge_e;
  j["equal_list"] = result.equal_list;
  j["nb_ge_e_list"] = result.nb_ge_e_list;
  auto list = [](const std::vector<CensusError>& items) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : items) a.push_back({{"line", e.line}, {"input", e.input}, {"message", e.message}});
    return a;
  };
  j["rejected"] = list(result.rejected);
  j["errors"] = list(result.errors);
  return j;
}

SweepResult barbell_sweep(std::size_t n) {
  if (n < 6) throw DomainError("barbell sweep needs n >= 6, got " + std::to_string(n));
  SweepResult s;
  s.n = n;
  for (std::size_t k = 2; k + 4 <= n; ++k) {
    const std::size_t sum = n + 2 - k;
    if (sum % 2) {
      s.notes.push_back("k=" + std::to_string(k) + " skipped: a+b=" + std::to_string(sum) +
                        " has no balanced split");
      continue;
    }
    const BarbellParams p{k, sum / 2, sum / 2};
    const auto v = barbell_kemeny(p);
    s.rows.push_back(SweepRow{k, p.a, p.b, v.k_e, *v.k_nb, "closed_form"});
  }
  return s;
}

SweepResult barbell_sweep_general(std::size_t n) {
  if (n < 5) throw DomainError("cycle barbells need n >= 5, got " + std::to_string(n));
  SweepResult s;
  s.n = n;
  for (std::size_t k = 1; k + 4 <= n + 1; ++k) {
    const std::size_t sum = n + 2 - k;
    for (std::size_t b = 3; 2 * b <= sum; ++b) {
      const BarbellParams p{k, sum - b, b};
      const auto v = barbell_kemeny(p);
      SweepRow row{k, p.a, p.b, v.k_e, {}, "closed_form"};
      if (v.k_nb) {
        row.k_nb = *v.k_nb;
      } else {
        const Graph g = gen_cycle_barbell(p);
        row.k_nb = kemeny_from_charpoly(
            charpoly_rational(nb_transition(g, OrientedEdgeIndex(g), kExactUncapped).exact()));
        row.nb_source = "engine";
      }
      s.rows.push_back(std::move(row));
    }
  }
  return s;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "k,a,b,k_e,k_nb,k_e_float,k_nb_float,nb_source\n";
  for (const auto& r : sweep.rows)
    out << r.k << ',' << r.a << ',' << r.b << ',' << to_string(r.k_e) << ',' << to_string(r.k_nb)
        << ',' << format12(to_double(r.k_e)) << ',' << format12(to_double(r.k_nb)) << ','
        << r.nb_source << '\n';
}

}  // namespace kemeny
