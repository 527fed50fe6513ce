#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "fanofol/catalog.hpp"
#include "fanofol/oracle.hpp"

namespace fanofol {

struct SweepFailure {
  std::string record;
  std::string check;
  std::string detail;
};

struct SweepReport {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<SweepFailure> failures;

  void add(const std::string& record, const CheckOutcome& c) {
    ++total;
    switch (c.status) {
      case CheckStatus::pass: ++passed; break;
      case CheckStatus::skip: ++skipped; break;
      case CheckStatus::fail:
        ++failed;
        failures.push_back({record, c.name, c.detail});
        break;
    }
  }
  void merge(const CheckReport& r) {
    for (const auto& c : r.checks) add(r.record_id, c);
  }
};

/// Evaluates fn(i) for i in [0, n) on a small thread pool; results are stored
/// by index so the output order never depends on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn, unsigned threads = 0) {
  std::vector<T> out(n);
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
    });
  }
  pool.clear();  // joins
  return out;
}

/// Bundle/divisor ranges for the formula-vs-oracle comparison.
struct OracleGrid {
  Int m_max = 4;
  Int b_max = 3;
  Int rprime_max = 3;
  Int k_max = 3;
  Int coef_max = 6;
  Int d_max = 6;
  Int c_max = 40;
  bool big_not_ample_only = false;
};

/// All descending b-lists of length <= rprime_max with entries <= b_max.
inline std::vector<std::vector<Int>> b_lists(Int b_max, Int rprime_max) {
  std::vector<std::vector<Int>> out;
  std::function<void(std::vector<Int>&, Int)> rec = [&](std::vector<Int>& cur, Int cap) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<Int>(cur.size()) == rprime_max) return;
    for (Int v = cap; v >= 0; --v) {
      cur.push_back(v);
      rec(cur, v);
      cur.pop_back();
    }
  };
  std::vector<Int> cur;
  rec(cur, b_max);
  return out;
}

inline std::vector<BundleVariety> oracle_bundles(const OracleGrid& g) {
  std::vector<BundleVariety> xs;
  for (Int k = 1; k <= g.k_max; ++k)
    for (Int m = 1; m <= g.m_max; ++m)
      for (auto& b : b_lists(g.b_max, g.rprime_max)) xs.emplace_back(k, m, b);
  return xs;
}

/// Formula against oracle on every integral big class with |beta|,|gamma| <= coef_max.
/// In big-not-ample mode the closed form must also equal (m*beta+gamma)/(m+b_1+1).
inline SweepReport sweep_oracle(const OracleGrid& g) {
  const auto xs = oracle_bundles(g);
  const auto reports = parallel_map<CheckReport>(xs.size(), [&](std::size_t i) {
    const auto& x = xs[i];
    CheckReport rep;
    rep.record_id = x.str();
    for (Int beta = -g.coef_max; beta <= g.coef_max; ++beta)
      for (Int gamma = -g.coef_max; gamma <= g.coef_max; ++gamma) {
        const Class2 d{Rational(beta), Rational(gamma)};
        const auto pos = classify_divisor(x, d);
        if (!pos.big || (g.big_not_ample_only && pos.ample)) continue;
        const std::string name = "formula_equals_oracle" + d.str();
        try {
          const Rational formula = generalized_index_bundle(x, d).value;
          const Rational oracle = oracle_generalized_index(x, d, g.d_max, std::max(g.c_max, x.b1() * g.d_max + 1));
          bool ok = formula == oracle;
          std::string detail = "formula=" + formula.str() + " oracle=" + oracle.str();
          if (g.big_not_ample_only) {
            const Rational lemma = (Rational(x.m()) * d.beta + d.gamma) / Rational(x.m() + x.b1() + 1);
            ok = ok && formula == lemma;
            detail += " lemma=" + lemma.str();
          }
          rep.checks.push_back({name, ok ? CheckStatus::pass : CheckStatus::fail, ok ? "" : detail});
        } catch (const Error& e) {
          rep.checks.push_back({name, CheckStatus::fail, e.what()});
        }
      }
    return rep;
  });
  SweepReport out;
  for (const auto& r : reports) out.merge(r);
  return out;
}

/// Oracle comparison for one record's anticanonical class, when it is a big
/// class on a bundle.
inline CheckOutcome record_oracle_check(const ExampleRecord& rec) {
  const auto* x = std::get_if<BundleVariety>(&rec.foliation.ambient);
  if (!x || !rec.invariants.gen_index) return {"formula_equals_oracle", CheckStatus::skip, "not a big bundle class"};
  const Int d_max = 3;
  const Rational oracle =
      oracle_generalized_index(*x, rec.foliation.anticanonical_class(), d_max, x->b1() * d_max + 12);
  const bool ok = oracle == *rec.invariants.gen_index;
  return {"formula_equals_oracle", ok ? CheckStatus::pass : CheckStatus::fail,
          ok ? "" : "stored=" + rec.invariants.gen_index->str() + " oracle=" + oracle.str()};
}

/// check_record plus the oracle comparison on every record.
inline SweepReport sweep_records(const std::vector<ExampleRecord>& recs) {
  const auto reports = parallel_map<CheckReport>(recs.size(), [&](std::size_t i) {
    auto rep = check_record(recs[i]);
    try {
      rep.checks.push_back(record_oracle_check(recs[i]));
    } catch (const Error& e) {
      rep.checks.push_back({"formula_equals_oracle", CheckStatus::fail, e.what()});
    }
    return rep;
  });
  SweepReport out;
  for (const auto& r : reports) out.merge(r);
  return out;
}

/// Synthesizes every request then checks it. An Unsupported answer is a
/// skip (the dispatcher named its bound); any other error is a failure.
inline SweepReport sweep_requests(const std::vector<SynthesisRequest>& reqs) {
  const auto reports = parallel_map<CheckReport>(reqs.size(), [&](std::size_t i) {
    CheckReport rep;
    try {
      const auto rec = synthesize(reqs[i]);
      rep = check_record(rec);
      rep.checks.push_back(record_oracle_check(rec));
    } catch (const UnsupportedError& e) {
      rep.record_id = detail::request_id(reqs[i]);
      rep.checks.push_back({"synthesis", CheckStatus::skip, e.what()});
    } catch (const Error& e) {
      rep.record_id = detail::request_id(reqs[i]);
      rep.checks.push_back({"synthesis", CheckStatus::fail, e.what()});
    }
    return rep;
  });
  SweepReport out;
  for (const auto& r : reports) out.merge(r);
  return out;
}

}  // namespace fanofol
