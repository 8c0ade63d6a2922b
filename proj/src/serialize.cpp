#include "disjoint/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace disjoint {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::string rational_cols(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "," + boost::multiprecision::denominator(r).str();
}

}  // namespace

Json to_json(const Nat& n) { return n.to_string(); }

Nat nat_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a decimal string, got " + j.dump());
  return Nat::parse(j.get<std::string>());
}

Json to_json(const Rational& r) {
  return Json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()}};
}

Rational rational_from_json(const Json& j) {
  const Nat num = nat_from_json(field(j, "num"));
  const Nat den = nat_from_json(field(j, "den"));
  if (den.is_zero()) throw std::invalid_argument("rational with zero denominator");
  return make_rational(num, den);
}

Json to_json(const IntSet& s) {
  Json elems = Json::array();
  for (const Nat& e : s.elems()) elems.push_back(e.to_string());
  return Json{{"limit", s.limit().to_string()}, {"elems", std::move(elems)}};
}

IntSet intset_from_json(const Json& j) {
  const Nat limit = nat_from_json(field(j, "limit"));
  const Json& arr = field(j, "elems");
  if (!arr.is_array()) throw std::invalid_argument("'elems' must be an array");
  std::vector<Nat> elems;
  elems.reserve(arr.size());
  for (const auto& e : arr) elems.push_back(nat_from_json(e));
  return IntSet(std::move(elems), limit);
}

Json to_json(const MixedRadixSpec& spec) {
  Json mods = Json::array();
  for (const Nat& m : spec.moduli()) mods.push_back(m.to_string());
  return Json{{"moduli", std::move(mods)}};
}

MixedRadixSpec spec_from_json(const Json& j) {
  const Json& arr = field(j, "moduli");
  if (!arr.is_array()) throw std::invalid_argument("'moduli' must be an array");
  std::vector<Nat> mods;
  for (const auto& m : arr) mods.push_back(nat_from_json(m));
  return MixedRadixSpec(std::move(mods));
}

Json to_json(const PairFile& p) {
  Json j;
  j["family"] = p.family;
  if (p.spec) j["spec"] = to_json(*p.spec);
  j["A"] = to_json(p.a);
  j["B"] = to_json(p.b);
  return j;
}

PairFile pair_from_json(const Json& j) {
  PairFile p;
  p.family = j.value("family", std::string("unknown"));
  if (j.contains("spec")) p.spec = spec_from_json(j.at("spec"));
  p.a = intset_from_json(field(j, "A"));
  p.b = intset_from_json(field(j, "B"));
  return p;
}

Json to_json(const FitResult& fit) {
  Json targets = Json::array();
  Json windows = Json::array();
  for (const auto& w : fit.windows) {
    targets.push_back(w.target.to_string());
    windows.push_back(Json{{"k", w.k},
                           {"target", w.target.to_string()},
                           {"n_k", w.n_k.to_string()},
                           {"p_2k", w.p_2k.to_string()},
                           {"lower", w.lower.to_string()},
                           {"upper", w.upper.to_string()},
                           {"m_2k", w.m_2k.to_string()},
                           {"bound", to_json(w.bound)}});
  }
  return Json{{"targets", std::move(targets)}, {"spec", to_json(fit.spec)}, {"windows", std::move(windows)}};
}

Json to_json(const SearchProblem& p, const SearchResult& r, bool with_stats) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(Json{{"A", to_json(to_intset(w.a, p.n))}, {"B", to_json(to_intset(w.b, p.n))}});
  }
  Json j{{"n", p.n},
         {"objective", std::string(to_string(p.objective))},
         {"value", r.best_value},
         {"optimal", r.optimal},
         {"witnesses", std::move(witnesses)}};
  if (with_stats) {
    j["stats"] = Json{{"nodes", r.stats.nodes},
                      {"bound_prunes", r.stats.bound_prunes},
                      {"conflict_prunes", r.stats.conflict_prunes},
                      {"subtrees", r.stats.subtrees}};
  }
  return j;
}

std::string profile_csv(const PairProfile& p) {
  std::ostringstream os;
  os << "x,countA,countB,product_ratio_num,product_ratio_den,in_ratio\n";
  for (const auto& r : p.rows) {
    os << r.x << ',' << r.count_a << ',' << r.count_b << ',' << rational_cols(r.product_ratio) << ','
       << format_fixed(r.in_ratio, kRealDecimals) << '\n';
  }
  return os.str();
}

std::string scan_csv(const std::vector<AnchorScan>& scans) {
  std::ostringstream os;
  os << "anchor,c_num,c_den,y,countA,countB,value_num,value_den,normalized_by\n";
  for (const auto& s : scans) {
    for (const auto& r : s.rows) {
      os << s.anchor << ',' << rational_cols(r.c) << ',' << r.y << ',' << r.count_a << ',' << r.count_b << ','
         << rational_cols(r.value) << ',' << (r.over_anchor ? "anchor" : "y") << '\n';
    }
  }
  return os.str();
}

std::string frontier_csv(const std::vector<FrontierRow>& rows) {
  std::ostringstream os;
  os << "family,two_minus_sp_num,two_minus_sp_den,in,quotient\n";
  for (const auto& r : rows) {
    os << r.family << ',' << rational_cols(r.two_minus_sp) << ',' << format_fixed(r.in, kRealDecimals) << ','
       << (r.quotient ? format_fixed(*r.quotient, kRealDecimals) : std::string("inf")) << '\n';
  }
  return os.str();
}

}  // namespace disjoint
