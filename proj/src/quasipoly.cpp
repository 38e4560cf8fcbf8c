#include "coneval/quasipoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace coneval {

namespace {

int math_mod(const Int& t, int p) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), t.get_mpz_t(), Int(p).get_mpz_t());
  return static_cast<int>(r.get_si());
}

Value eval_poly(const std::vector<Value>& coeffs, const Int& t) {
  Value tv{Rational(t)};
  Value acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * tv + coeffs[i];
  return acc;
}

bool coeff_close(const Value& a, const Value& b, double tol) {
  if (a.exact() && b.exact()) {
    if (a.rat() == b.rat()) return true;
    return std::abs(a.num() - b.num()) <= tol && tol > 0;
  }
  return std::abs(a.num() - b.num()) <= tol + a.err() + b.err();
}

}  // namespace

Value qp_evaluate(const QuasiPolynomial& q, const Int& t) {
  return eval_poly(q.constituents.at(math_mod(t, q.period)), t);
}

QuasiPolynomial qp_interpolate(const std::vector<std::pair<Int, Value>>& samples, int period,
                               int degree) {
  if (period <= 0 || degree < 0) throw std::invalid_argument("bad period or degree");
  std::map<int, std::vector<std::pair<Int, Value>>> by_residue;
  for (const auto& s : samples) {
    if (s.first < 1) throw std::invalid_argument("samples must have t >= 1");
    by_residue[math_mod(s.first, period)].push_back(s);
  }

  QuasiPolynomial q;
  q.period = period;
  q.degree = degree;
  q.constituents.resize(period);
  const std::size_t need = static_cast<std::size_t>(degree) + 1;

  for (int r = 0; r < period; ++r) {
    auto it = by_residue.find(r);
    if (it == by_residue.end() || it->second.size() < need)
      throw std::invalid_argument("insufficient samples for residue class");
    auto& pts = it->second;
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].first == pts[i - 1].first) throw std::invalid_argument("duplicate sample");

    bool all_exact = true;
    for (const auto& p : pts)
      if (!p.second.exact()) all_exact = false;

    std::vector<Value> coeffs(need);
    if (all_exact) {
      RatMat vand(need, need);
      RatVec rhs(need);
      for (std::size_t i = 0; i < need; ++i) {
        Rational t{pts[i].first};
        Rational pw = 1;
        for (std::size_t j = 0; j < need; ++j) {
          vand.at(i, j) = pw;
          pw *= t;
        }
        rhs[i] = pts[i].second.rat();
      }
      RatVec x = *solve_exact(vand, rhs);
      for (std::size_t j = 0; j < need; ++j) coeffs[j] = Value(x[j]);
    } else {
      // Numeric fit with explicit inverse so sample error bounds propagate.
      std::vector<std::vector<double>> a(need, std::vector<double>(2 * need, 0.0));
      for (std::size_t i = 0; i < need; ++i) {
        double t = pts[i].first.get_d();
        double pw = 1;
        for (std::size_t j = 0; j < need; ++j) {
          a[i][j] = pw;
          pw *= t;
        }
        a[i][need + i] = 1;
      }
      for (std::size_t col = 0; col < need; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < need; ++i)
          if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        std::swap(a[col], a[piv]);
        if (std::abs(a[col][col]) < 1e-12) throw std::invalid_argument("singular fit");
        double inv = 1.0 / a[col][col];
        for (double& x : a[col]) x *= inv;
        for (std::size_t i = 0; i < need; ++i) {
          if (i == col) continue;
          double f = a[i][col];
          for (std::size_t j = 0; j < 2 * need; ++j) a[i][j] -= f * a[col][j];
        }
      }
      for (std::size_t j = 0; j < need; ++j) {
        double val = 0, err = 0;
        for (std::size_t i = 0; i < need; ++i) {
          double w = a[j][need + i];
          val += w * pts[i].second.num();
          err += std::abs(w) * (pts[i].second.err() + 1e-13);
        }
        coeffs[j] = Value::approx(val, err);
      }
    }

    // Extra samples must lie on the fit; this is the polynomiality check.
    for (std::size_t i = need; i < pts.size(); ++i) {
      Value pred = eval_poly(coeffs, pts[i].first);
      if (!coeff_close(pred, pts[i].second, 0.0))
        throw std::invalid_argument("not a quasi-polynomial of claimed (p, d)");
    }
    q.constituents[r] = std::move(coeffs);
  }
  return q;
}

CompareReport qp_compare(const QuasiPolynomial& a, const QuasiPolynomial& b, double tol) {
  long long l = std::lcm<long long>(a.period, b.period);
  int deg = std::max(a.degree, b.degree);
  for (long long r = 0; r < l; ++r) {
    const auto& ca = a.constituents[r % a.period];
    const auto& cb = b.constituents[r % b.period];
    for (int j = 0; j <= deg; ++j) {
      Value va = j < static_cast<int>(ca.size()) ? ca[j] : Value(0);
      Value vb = j < static_cast<int>(cb.size()) ? cb[j] : Value(0);
      if (!coeff_close(va, vb, tol)) {
        return {false, "mismatch at residue " + std::to_string(r) + " coefficient " +
                           std::to_string(j) + ": " + va.str() + " vs " + vb.str()};
      }
    }
  }
  return {true, "equal"};
}

int qp_minimal_period(const QuasiPolynomial& q, double tol) {
  for (int p = 1; p <= q.period; ++p) {
    if (q.period % p != 0) continue;
    bool ok = true;
    for (int r = 0; r < q.period && ok; ++r) {
      const auto& ca = q.constituents[r];
      const auto& cb = q.constituents[r % p];
      for (std::size_t j = 0; j < std::max(ca.size(), cb.size()); ++j) {
        Value va = j < ca.size() ? ca[j] : Value(0);
        Value vb = j < cb.size() ? cb[j] : Value(0);
        if (!coeff_close(va, vb, tol)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return p;
  }
  return q.period;
}

ReciprocityReport qp_reciprocity_check(const QuasiPolynomial& q,
                                       const std::function<Value(const Int&)>& oracle, int dim,
                                       const std::vector<Int>& t_range, double tol) {
  ReciprocityReport rep;
  rep.pass = true;
  for (const Int& t : t_range) {
    if (t <= 0) throw std::invalid_argument("t range must be positive");
    ReciprocityEntry e;
    e.t = t;
    e.lhs = qp_evaluate(q, Int(-t));
    Value o = oracle(t);
    e.rhs = dim % 2 == 0 ? o : -o;
    if (e.lhs.exact() && e.rhs.exact()) {
      e.residual = std::abs((e.lhs - e.rhs).num());
      e.ok = tol == 0.0 ? e.lhs.rat() == e.rhs.rat() : e.residual <= tol;
    } else {
      e.residual = std::abs(e.lhs.num() - e.rhs.num());
      e.ok = e.residual <= tol + e.lhs.err() + e.rhs.err();
    }
    rep.pass = rep.pass && e.ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::string QuasiPolynomial::to_json() const {
  nlohmann::json j;
  j["period"] = period;
  j["degree"] = degree;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : constituents) {
    nlohmann::json jc = nlohmann::json::array();
    for (const Value& v : c) jc.push_back(v.str());
    cs.push_back(jc);
  }
  j["constituents"] = cs;
  return j.dump();
}

QuasiPolynomial QuasiPolynomial::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  QuasiPolynomial q;
  q.period = j.at("period").get<int>();
  q.degree = j.at("degree").get<int>();
  for (const auto& jc : j.at("constituents")) {
    std::vector<Value> c;
    for (const auto& js : jc) {
      std::string s = js.get<std::string>();
      if (s.rfind("approx:", 0) == 0)
        c.push_back(Value::approx(std::stod(s.substr(7)), 0.0));
      else
        c.push_back(Value(rat_parse(s)));
    }
    q.constituents.push_back(std::move(c));
  }
  return q;
}

std::string ReciprocityReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je;
    je["t"] = e.t.get_str();
    je["lhs"] = e.lhs.str();
    je["rhs"] = e.rhs.str();
    je["residual"] = e.residual;
    je["ok"] = e.ok;
    es.push_back(je);
  }
  j["entries"] = es;
  return j.dump();
}

}  // namespace coneval
