#include "knotdom/knotbase.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <set>
#include <utility>

#include "knotdom/alexander.hpp"

namespace knotdom {

namespace {

constexpr std::array<std::string_view, kFlagCount> kFlagNames = {
    "alternating", "toroidally_alternating", "fibred", "two_bridge", "montesinos", "small", "free",
    "simple", "unknot", "no_winding_zero_companion", "hyperbolic", "lo_double_cover", "lspace_double_cover",
};

// Jones is filled in automatically only below this size; the state sum doubles per crossing.
constexpr int kAutoJonesCrossings = 16;

const std::set<std::string, std::less<>> kRecordKeys = {
    "name",        "diagram", "braid",        "delta",        "determinant",      "jones",
    "genus_lower", "genus_upper", "genus_exact", "ghat",      "volume",           "flags",
    "mutant_class", "connected_sum_of", "satellite_of", "sum_of_simple", "same_knot_as",
};

[[noreturn]] void fail(const std::string& record, const std::string& what) {
  throw CorpusError("record '" + record + "': " + what);
}

Tri tri_from_json(const nlohmann::json& v, const std::string& record, const std::string& key) {
  if (!v.is_boolean()) fail(record, "'" + key + "' must be true or false");
  return v.get<bool>() ? Tri::True : Tri::False;
}

std::optional<int> int_field(const nlohmann::json& j, const char* key, const std::string& record) {
  if (!j.contains(key)) return std::nullopt;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) fail(record, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::optional<std::string> string_field(const nlohmann::json& j, const char* key, const std::string& record) {
  if (!j.contains(key)) return std::nullopt;
  const auto& v = j.at(key);
  if (!v.is_string()) fail(record, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

nlohmann::json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

struct Implication {
  Flag premise;
  Flag conclusion;
  Tri value;
};

// Listed so that each premise is settled before it is used; one pass reaches the fixed point.
constexpr Implication kImplications[] = {
    {Flag::unknot, Flag::fibred, Tri::True},
    {Flag::unknot, Flag::small, Tri::True},
    {Flag::unknot, Flag::simple, Tri::True},
    {Flag::unknot, Flag::hyperbolic, Tri::False},
    {Flag::two_bridge, Flag::alternating, Tri::True},
    {Flag::two_bridge, Flag::small, Tri::True},
    {Flag::hyperbolic, Flag::simple, Tri::True},
    {Flag::simple, Flag::no_winding_zero_companion, Tri::True},
    {Flag::alternating, Flag::toroidally_alternating, Tri::True},
    {Flag::alternating, Flag::free, Tri::True},
    {Flag::montesinos, Flag::free, Tri::True},
    {Flag::fibred, Flag::free, Tri::True},
    {Flag::small, Flag::free, Tri::True},
};

bool palindromic(const LaurentPoly& p) {
  if (p.is_zero()) return true;
  const int lo = p.min_degree(), hi = p.max_degree();
  for (int i = lo; i <= hi; ++i)
    if (p.coefficient(i) != p.coefficient(lo + hi - i)) return false;
  return true;
}

}  // namespace

std::string_view flag_name(Flag f) { return kFlagNames[static_cast<std::size_t>(f)]; }

std::optional<Flag> flag_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFlagCount; ++i)
    if (kFlagNames[i] == name) return static_cast<Flag>(i);
  return std::nullopt;
}

Volume Volume::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&s] { return CorpusError("volume '" + s + "' is not a nonnegative decimal"); };
  const auto dot = s.find('.');
  std::string whole = s.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  auto all_digits = [](const std::string& d) {
    return std::all_of(d.begin(), d.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
  };
  if (whole.empty() || !all_digits(whole) || !all_digits(frac)) throw bad();
  bool round_up = frac.size() > kDecimals && frac[kDecimals] >= '5';
  frac.resize(kDecimals, '0');
  Volume v;
  v.scaled_ = Integer(whole + frac);
  if (round_up) v.scaled_ += 1;
  return v;
}

std::string Volume::str() const {
  std::string digits = scaled_.get_str();
  if (digits.size() <= static_cast<std::size_t>(kDecimals)) digits.insert(0, kDecimals + 1 - digits.size(), '0');
  digits.insert(digits.size() - kDecimals, ".");
  return digits;
}

std::optional<PDCode> KnotRecord::planar_diagram() const {
  if (diagram) return diagram;
  if (braid) return braid_to_pd(*braid);
  return std::nullopt;
}

void Corpus::add(KnotRecord record) {
  std::string name = record.name;
  if (!records_.emplace(name, std::move(record)).second) throw CorpusError("duplicate record name '" + name + "'");
}

const KnotRecord* Corpus::find(std::string_view name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

const KnotRecord& Corpus::at(std::string_view name) const {
  if (const auto* r = find(name)) return *r;
  throw CorpusError("no record named '" + std::string(name) + "'");
}

std::vector<std::string> Corpus::names() const {
  std::vector<std::string> out;
  out.reserve(records_.size());
  for (const auto& [name, _] : records_) out.push_back(name);
  return out;
}

KnotRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw CorpusError("corpus entry is not an object");
  if (!j.contains("name") || !j.at("name").is_string() || j.at("name").get<std::string>().empty())
    throw CorpusError("corpus entry without a name");
  KnotRecord r;
  r.name = j.at("name").get<std::string>();
  for (const auto& [key, _] : j.items())
    if (!kRecordKeys.contains(key)) fail(r.name, "unknown field '" + key + "'");

  try {
    if (auto s = string_field(j, "diagram", r.name)) r.diagram = parse_pd(*s);
    if (auto s = string_field(j, "braid", r.name)) r.braid = parse_braid(*s);
    if (auto s = string_field(j, "delta", r.name)) r.delta = LaurentPoly::parse(*s);
    if (auto s = string_field(j, "jones", r.name)) r.jones = LaurentPoly::parse(*s);
  } catch (const std::invalid_argument& e) {
    fail(r.name, e.what());
  }
  if (j.contains("determinant")) {
    const auto& v = j.at("determinant");
    if (v.is_number_integer())
      r.determinant = Integer(std::to_string(v.get<long long>()));
    else
      fail(r.name, "'determinant' must be an integer");
  }
  r.genus_lower = int_field(j, "genus_lower", r.name);
  r.genus_upper = int_field(j, "genus_upper", r.name);
  r.genus_exact = int_field(j, "genus_exact", r.name);
  r.ghat = int_field(j, "ghat", r.name);
  if (auto s = string_field(j, "volume", r.name)) r.volume = Volume::parse(*s);
  if (j.contains("flags")) {
    const auto& flags = j.at("flags");
    if (!flags.is_object()) fail(r.name, "'flags' must be an object");
    for (const auto& [key, value] : flags.items()) {
      auto f = flag_from_name(key);
      if (!f) fail(r.name, "unknown flag '" + key + "'");
      r.flags.set(*f, tri_from_json(value, r.name, key));
    }
  }
  r.mutant_class = string_field(j, "mutant_class", r.name);
  if (j.contains("connected_sum_of")) {
    const auto& v = j.at("connected_sum_of");
    if (!v.is_array() || v.empty()) fail(r.name, "'connected_sum_of' must be a nonempty array of names");
    std::vector<std::string> parts;
    for (const auto& p : v) {
      if (!p.is_string()) fail(r.name, "'connected_sum_of' must contain names");
      parts.push_back(p.get<std::string>());
    }
    r.connected_sum_of = std::move(parts);
  }
  if (j.contains("satellite_of")) {
    const auto& v = j.at("satellite_of");
    if (!v.is_object() || !v.contains("pattern") || !v.contains("companion") || !v.contains("winding") ||
        !v.at("pattern").is_string() || !v.at("companion").is_string() || !v.at("winding").is_number_integer())
      fail(r.name, "'satellite_of' needs string 'pattern', string 'companion' and integer 'winding'");
    r.satellite_of = SatelliteOf{v.at("pattern").get<std::string>(), v.at("companion").get<std::string>(),
                                 v.at("winding").get<int>()};
    if (r.satellite_of->winding < 0) fail(r.name, "satellite winding number must be >= 0");
  }
  if (j.contains("sum_of_simple")) r.sum_of_simple = tri_from_json(j.at("sum_of_simple"), r.name, "sum_of_simple");
  r.same_knot_as = string_field(j, "same_knot_as", r.name);
  return r;
}

nlohmann::json record_to_json(const KnotRecord& r) {
  nlohmann::json j;
  j["name"] = r.name;
  if (r.diagram) j["diagram"] = r.diagram->to_string();
  if (r.braid) j["braid"] = r.braid->to_string();
  if (r.delta) j["delta"] = r.delta->to_string();
  if (r.determinant) j["determinant"] = integer_json(*r.determinant);
  if (r.jones) j["jones"] = r.jones->to_string();
  if (r.genus_lower) j["genus_lower"] = *r.genus_lower;
  if (r.genus_upper) j["genus_upper"] = *r.genus_upper;
  if (r.genus_exact) j["genus_exact"] = *r.genus_exact;
  if (r.ghat) j["ghat"] = *r.ghat;
  if (r.volume) j["volume"] = r.volume->str();
  nlohmann::json flags = nlohmann::json::object();
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    Tri v = r.flags.get(static_cast<Flag>(i));
    if (v != Tri::Unknown) flags[std::string(kFlagNames[i])] = is_true(v);
  }
  j["flags"] = flags;
  if (r.mutant_class) j["mutant_class"] = *r.mutant_class;
  if (r.connected_sum_of) j["connected_sum_of"] = *r.connected_sum_of;
  if (r.satellite_of)
    j["satellite_of"] = {{"pattern", r.satellite_of->pattern},
                         {"companion", r.satellite_of->companion},
                         {"winding", r.satellite_of->winding}};
  if (r.sum_of_simple != Tri::Unknown) j["sum_of_simple"] = is_true(r.sum_of_simple);
  if (r.same_knot_as) j["same_knot_as"] = *r.same_knot_as;
  return j;
}

int apply_flag_closure(KnotRecord& r) {
  int passes = 0;
  bool changed = true;
  auto assign = [&r, &changed](Tri current, Tri value, std::string_view what, auto&& store) {
    if (current == value) return;
    if (current != Tri::Unknown)
      fail(r.name, "flag contradiction: implications force " + std::string(what) + " = " +
                       (is_true(value) ? "true" : "false"));
    store();
    changed = true;
  };
  while (changed) {
    changed = false;
    ++passes;
    for (const auto& rule : kImplications) {
      if (!r.flags[rule.premise]) continue;
      assign(r.flag(rule.conclusion), rule.value, flag_name(rule.conclusion),
             [&] { r.flags.set(rule.conclusion, rule.value); });
    }
    if (r.flags[Flag::simple] || r.flags[Flag::unknot])
      assign(r.sum_of_simple, Tri::True, "sum_of_simple", [&] { r.sum_of_simple = Tri::True; });
  }
  return passes;
}

KnotRecord enrich_record(KnotRecord r) {
  std::optional<LaurentPoly> computed;
  std::optional<SeifertCircles> seifert;
  try {
    if (r.diagram) {
      computed = alexander_polynomial(*r.diagram);
      seifert = seifert_circles(*r.diagram);
    }
    if (r.braid) {
      PDCode closure = braid_to_pd(*r.braid);
      LaurentPoly from_braid = alexander_polynomial(closure);
      if (computed && *computed != from_braid)
        fail(r.name, "diagram and braid give different Alexander polynomials (" + computed->to_string() + " vs " +
                         from_braid.to_string() + ")");
      if (!computed) {
        computed = from_braid;
        seifert = seifert_circles(closure);
      }
    }
  } catch (const DiagramError& e) {
    fail(r.name, e.what());
  }

  if (computed) {
    if (r.delta && normalize(*r.delta) != *computed)
      fail(r.name, "declared delta " + normalize(*r.delta).to_string() + " but diagram computes " +
                       computed->to_string());
    r.delta = computed;
  } else if (!r.delta) {
    fail(r.name, "metadata-only record must declare delta");
  }
  r.delta = normalize(*r.delta);
  const LaurentPoly& delta = *r.delta;
  if (delta.is_zero()) fail(r.name, "delta is zero");
  if (abs(eval_int(delta, Integer(1))) != 1) fail(r.name, "delta(1) is not +-1: " + delta.to_string());
  if (!palindromic(delta)) fail(r.name, "delta is not palindromic: " + delta.to_string());

  const Integer det = determinant_invariant(delta);
  if (r.determinant && *r.determinant != det)
    fail(r.name, "declared determinant " + r.determinant->get_str() + " but |delta(-1)| = " + det.get_str());
  r.determinant = det;

  const int lower = delta.max_degree() / 2;
  if (r.genus_lower && *r.genus_lower != lower)
    fail(r.name, "declared genus_lower " + std::to_string(*r.genus_lower) + " but degree bound gives " +
                     std::to_string(lower));
  r.genus_lower = lower;
  if (seifert) {
    if (r.genus_upper && *r.genus_upper != seifert->genus_upper)
      fail(r.name, "declared genus_upper " + std::to_string(*r.genus_upper) + " but Seifert circles give " +
                       std::to_string(seifert->genus_upper));
    r.genus_upper = seifert->genus_upper;
  }
  if (r.genus_upper && *r.genus_upper < lower) fail(r.name, "genus upper bound is below the degree bound");

  if (auto pd = r.planar_diagram(); pd && pd->crossing_count() <= kAutoJonesCrossings) {
    LaurentPoly v = jones_polynomial(*pd);
    if (r.jones && *r.jones != v)
      fail(r.name, "declared jones " + r.jones->to_string() + " but diagram computes " + v.to_string());
    r.jones = v;
  }

  apply_flag_closure(r);

  if (r.flags[Flag::unknot]) {
    if (delta != LaurentPoly(1)) fail(r.name, "unknot with nontrivial delta");
    if ((r.genus_exact && *r.genus_exact != 0) || (r.ghat && *r.ghat != 0))
      fail(r.name, "unknot with nonzero genus");
    r.genus_exact = 0;
    r.ghat = 0;
  }
  if (r.genus_exact) {
    if (*r.genus_exact < lower || (r.genus_upper && *r.genus_exact > *r.genus_upper))
      fail(r.name, "genus_exact " + std::to_string(*r.genus_exact) + " outside the computed interval");
  } else if (r.genus_upper && *r.genus_upper == lower) {
    r.genus_exact = lower;
  }
  if (r.flags[Flag::fibred] && abs(delta.leading_coefficient()) != 1)
    fail(r.name, "flag contradiction: fibred knot with non-monic delta " + delta.to_string());
  if ((r.flags[Flag::fibred] || r.flags[Flag::two_bridge]) && r.genus_exact) {
    if (r.ghat && *r.ghat != *r.genus_exact) fail(r.name, "ghat must equal the genus for fibred or 2-bridge knots");
    r.ghat = r.genus_exact;
  }
  if (r.ghat && r.genus_exact && *r.ghat < *r.genus_exact) fail(r.name, "ghat below the genus");
  if (r.ghat && *r.ghat < lower) fail(r.name, "ghat below the degree bound");

  r.enriched = true;
  return r;
}

GenusInterval genus_interval(const KnotRecord& r) {
  if (r.genus_exact) return {*r.genus_exact, *r.genus_exact};
  return {r.genus_lower.value_or(0), r.genus_upper};
}

Corpus parse_corpus(const nlohmann::json& document, unsigned threads) {
  if (!document.is_array()) throw CorpusError("corpus must be a JSON array of records");
  std::vector<KnotRecord> parsed;
  parsed.reserve(document.size());
  std::set<std::string, std::less<>> seen;
  for (const auto& entry : document) {
    parsed.push_back(record_from_json(entry));
    if (!seen.insert(parsed.back().name).second)
      throw CorpusError("duplicate record name '" + parsed.back().name + "'");
  }

  std::vector<KnotRecord> enriched(parsed.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < parsed.size(); ++i) enriched[i] = enrich_record(std::move(parsed[i]));
  } else {
    std::vector<std::future<KnotRecord>> jobs;
    for (auto& r : parsed) jobs.push_back(std::async(std::launch::async, enrich_record, std::move(r)));
    for (std::size_t i = 0; i < jobs.size(); ++i) enriched[i] = jobs[i].get();
  }

  Corpus corpus;
  for (auto& r : enriched) corpus.add(std::move(r));

  std::map<std::string, int> mutant_members;
  for (const auto& [name, r] : corpus.records()) {
    auto resolve = [&](const std::string& target, const char* field) -> const KnotRecord& {
      const KnotRecord* other = corpus.find(target);
      if (!other) fail(name, std::string(field) + " refers to unknown record '" + target + "'");
      if (other->same_knot_as) fail(name, std::string(field) + " must name the canonical record, not '" + target + "'");
      return *other;
    };
    if (r.same_knot_as) {
      const auto& other = resolve(*r.same_knot_as, "same_knot_as");
      if (other.name == name) fail(name, "same_knot_as refers to itself");
      if (*other.delta != *r.delta) fail(name, "same_knot_as target has a different delta");
    }
    if (r.connected_sum_of) {
      LaurentPoly product(1);
      for (const auto& part : *r.connected_sum_of) product = connected_sum_delta(product, *resolve(part, "connected_sum_of").delta);
      if (product != *r.delta)
        fail(name, "delta " + r.delta->to_string() + " is not the product of its summands' (" + product.to_string() + ")");
    }
    if (r.satellite_of) {
      const auto& pattern = resolve(r.satellite_of->pattern, "satellite_of.pattern");
      const auto& companion = resolve(r.satellite_of->companion, "satellite_of.companion");
      LaurentPoly expected = satellite_delta(*pattern.delta, *companion.delta, r.satellite_of->winding);
      if (expected != *r.delta)
        fail(name, "delta " + r.delta->to_string() + " disagrees with the satellite formula (" + expected.to_string() + ")");
    }
    if (r.mutant_class) ++mutant_members[*r.mutant_class];
  }
  for (const auto& [cls, count] : mutant_members)
    if (count < 2) throw CorpusError("mutant class '" + cls + "' has no peer in the corpus");
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, unsigned threads) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file '" + path.string() + "'");
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CorpusError("corpus file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_corpus(document, threads);
}

}  // namespace knotdom
