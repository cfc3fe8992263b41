// Test-only reference implementations. They read algebra documents
// directly and spell out every definition literally, sharing no code with
// the library beyond the JSON documents they are given.
#ifndef MTLSOFT_TESTS_ORACLES_HPP
#define MTLSOFT_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace oracle {

using nlohmann::json;
using Set = std::set<int>;

struct Tables {
  int n = 0;
  int top = 0;
  std::vector<std::vector<int>> prod, res;

  bool leq(int x, int y) const { return res[x][y] == top; }
  int neg(int x) const { return res[x][0]; }
  int join(int x, int y) const {
    for (int z = 0; z < n; ++z) {
      if (!leq(x, z) || !leq(y, z)) continue;
      bool least = true;
      for (int w = 0; w < n; ++w) {
        if (leq(x, w) && leq(y, w) && !leq(z, w)) least = false;
      }
      if (least) return z;
    }
    return -1;
  }
};

inline Tables tables(const json& doc) {
  Tables t;
  std::map<std::string, int> ix;
  for (const auto& l : doc["labels"]) ix[l.get<std::string>()] = t.n++;
  t.top = t.n - 1;
  for (const char* name : {"prod", "res"}) {
    auto& dst = std::string(name) == "prod" ? t.prod : t.res;
    for (const auto& row : doc[name]) {
      std::vector<int> r;
      for (const auto& c : row) r.push_back(ix.at(c.get<std::string>()));
      dst.push_back(r);
    }
  }
  return t;
}

inline Set members(int n, unsigned long long mask) {
  Set s;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1ULL) s.insert(i);
  }
  return s;
}

// Product-closed and upward closed.
inline bool is_filter(const Tables& t, const Set& s) {
  if (s.empty()) return false;
  for (int x : s) {
    for (int y : s) {
      if (!s.count(t.prod[x][y])) return false;
    }
    for (int y = 0; y < t.n; ++y) {
      if (t.leq(x, y) && !s.count(y)) return false;
    }
  }
  return true;
}

inline bool is_boolean(const Tables& t, const Set& s) {
  for (int x = 0; x < t.n; ++x) {
    if (!s.count(t.join(x, t.neg(x)))) return false;
  }
  return true;
}

inline bool is_g(const Tables& t, const Set& s) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      if (s.count(t.res[t.prod[x][x]][y]) && !s.count(t.res[x][y])) return false;
    }
  }
  return true;
}

inline bool is_mv(const Tables& t, const Set& s) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      if (s.count(t.res[x][y]) && !s.count(t.res[t.res[t.res[y][x]][x]][y])) return false;
    }
  }
  return true;
}

inline std::vector<Set> all_filters(const Tables& t) {
  std::vector<Set> out;
  for (unsigned long long m = 1; m < (1ULL << t.n); ++m) {
    Set s = members(t.n, m);
    if (is_filter(t, s)) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fuzzy definitions, written one by one. mu holds grid numerators over D.

using Mu = std::vector<int>;

inline int min2(int a, int b) { return std::min(a, b); }
inline int min3(int a, int b, int c) { return std::min({a, b, c}); }

// Product closure and monotonicity (F1, F2).
inline bool fuzzy_filter(const Tables& t, const Mu& mu) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      if (mu[t.prod[x][y]] < min2(mu[x], mu[y])) return false;
      if (t.leq(x, y) && mu[x] > mu[y]) return false;
    }
  }
  return true;
}

// Top is maximal and modus ponens holds (F3, F4).
inline bool fuzzy_filter_f3f4(const Tables& t, const Mu& mu) {
  for (int x = 0; x < t.n; ++x) {
    if (mu[t.top] < mu[x]) return false;
    for (int y = 0; y < t.n; ++y) {
      if (mu[y] < min2(mu[t.res[x][y]], mu[x])) return false;
    }
  }
  return true;
}

// Filter whose value at x v x' equals the value at 1.
inline bool fuzzy_boolean_def(const Tables& t, const Mu& mu) {
  if (!fuzzy_filter(t, mu)) return false;
  for (int x = 0; x < t.n; ++x) {
    if (mu[t.join(x, t.neg(x))] != mu[t.top]) return false;
  }
  return true;
}

// Boolean condition of the implication form, with an optional cap on the
// right (in-or-q) or floor on the left (bar). cap = D, floor = 0 is plain.
inline bool boolean_rule(const Tables& t, const Mu& mu, int floor, int cap) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      for (int z = 0; z < t.n; ++z) {
        const int lhs = std::max(mu[t.res[x][z]], floor);
        if (lhs < min3(mu[t.res[x][t.res[t.neg(z)][y]]], mu[t.res[y][z]], cap)) return false;
      }
    }
  }
  return true;
}

// Restriction form: mu(x) >= mu((x -> y) -> x).
inline bool restriction_rule(const Tables& t, const Mu& mu) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      if (mu[x] < mu[t.res[t.res[x][y]][x]]) return false;
    }
  }
  return true;
}

// Generalized filter: cap = D/2 for in-or-q, floor = D/2 for the barred family,
// floor = alpha and cap = beta for thresholds.
inline bool capped_filter(const Tables& t, const Mu& mu, int floor, int cap) {
  for (int x = 0; x < t.n; ++x) {
    if (std::max(mu[t.top], floor) < min2(mu[x], cap)) return false;
    for (int y = 0; y < t.n; ++y) {
      if (std::max(mu[y], floor) < min3(mu[t.res[x][y]], mu[x], cap)) return false;
    }
  }
  return true;
}

inline bool mv_rule(const Tables& t, const Mu& mu, int floor, int cap) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      if (std::max(mu[t.res[t.res[t.res[y][x]][x]][y]], floor) < min2(mu[t.res[x][y]], cap)) return false;
    }
  }
  return true;
}

inline bool g_rule(const Tables& t, const Mu& mu, int floor, int cap) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      if (std::max(mu[t.res[x][y]], floor) < min2(mu[t.res[t.prod[x][x]][y]], cap)) return false;
    }
  }
  return true;
}

/// kind: 0 filter, 1 boolean, 2 mv, 3 g.
inline bool fuzzy_kind(const Tables& t, const Mu& mu, int kind, int floor, int cap) {
  if (!capped_filter(t, mu, floor, cap)) return false;
  switch (kind) {
    case 1: return boolean_rule(t, mu, floor, cap);
    case 2: return mv_rule(t, mu, floor, cap);
    case 3: return g_rule(t, mu, floor, cap);
    default: return true;
  }
}

// ---------------------------------------------------------------------------
// Algebra generators for property tests. MTL-algebras form a variety, so
// chains and their direct products are MTL-algebras.

inline json from_ops(int n, const std::vector<std::string>& labels, auto prod, auto res) {
  json doc{{"labels", labels}, {"prod", json::array()}, {"res", json::array()}};
  for (int x = 0; x < n; ++x) {
    json p = json::array(), r = json::array();
    for (int y = 0; y < n; ++y) {
      p.push_back(labels[prod(x, y)]);
      r.push_back(labels[res(x, y)]);
    }
    doc["prod"].push_back(p);
    doc["res"].push_back(r);
  }
  return doc;
}

inline std::vector<std::string> numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

/// Lukasiewicz chain with k elements 0 < 1/(k-1) < ... < 1.
inline json lukasiewicz_chain(int k) {
  const int m = k - 1;
  return from_ops(
      k, numbered(k), [&](int x, int y) { return std::max(0, x + y - m); },
      [&](int x, int y) { return std::min(m, m - x + y); });
}

/// Goedel chain with k elements.
inline json goedel_chain(int k) {
  return from_ops(
      k, numbered(k), [](int x, int y) { return std::min(x, y); }, [&](int x, int y) { return x <= y ? k - 1 : y; });
}

/// Nilpotent-minimum chain with an even number k of elements.
inline json nilpotent_minimum_chain(int k) {
  const int m = k - 1;
  return from_ops(
      k, numbered(k), [&](int x, int y) { return x + y > m ? std::min(x, y) : 0; },
      [&](int x, int y) { return x <= y ? m : std::max(m - x, y); });
}

/// Direct product A x B with pairs encoded as a * |B| + b (bottom first, top last).
inline json product(const json& a, const json& b) {
  const Tables ta = tables(a), tb = tables(b);
  const int n = ta.n * tb.n;
  auto split = [&](int v) { return std::pair{v / tb.n, v % tb.n}; };
  return from_ops(
      n, numbered(n),
      [&](int x, int y) {
        auto [xa, xb] = split(x);
        auto [ya, yb] = split(y);
        return ta.prod[xa][ya] * tb.n + tb.prod[xb][yb];
      },
      [&](int x, int y) {
        auto [xa, xb] = split(x);
        auto [ya, yb] = split(y);
        return ta.res[xa][ya] * tb.n + tb.res[xb][yb];
      });
}

}  // namespace oracle

#endif  // MTLSOFT_TESTS_ORACLES_HPP
