#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "addbasis/harness.hpp"
#include "addbasis/sampling.hpp"

namespace addbasis {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& entry, const std::string& detail) {
  throw Error(Errc::ParseError, "entry '" + entry + "': " + detail);
}

[[noreturn]] void invalid(const std::string& entry, const std::string& field, const std::string& detail) {
  throw Error(Errc::ValidationError, "entry '" + entry + "', field '" + field + "': " + detail);
}

const json& require(const json& obj, const char* key, const std::string& entry) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(entry, std::string("missing field '") + key + "'");
  return *it;
}

Int as_int(const json& v, const std::string& entry, const std::string& field) {
  if (!v.is_number_integer()) parse_fail(entry, "field '" + field + "' must be an integer");
  return v.get<Int>();
}

std::vector<Int> as_int_array(const json& v, const std::string& entry, const std::string& field) {
  if (!v.is_array()) parse_fail(entry, "field '" + field + "' must be an array");
  std::vector<Int> out;
  for (const auto& x : v) out.push_back(as_int(x, entry, field));
  return out;
}

EventuallyPeriodicSet parse_set_literal(const json& lit, const std::string& entry) {
  if (!lit.is_object()) parse_fail(entry, "field 'basis' must be an object");
  auto exceptional = as_int_array(require(lit, "exceptional", entry), entry, "basis.exceptional");
  const Int threshold = as_int(require(lit, "threshold", entry), entry, "basis.threshold");
  const Int modulus = as_int(require(lit, "modulus", entry), entry, "basis.modulus");
  const auto residues = as_int_array(require(lit, "residues", entry), entry, "basis.residues");
  if (modulus < 1) invalid(entry, "basis.modulus", "must be positive, got " + std::to_string(modulus));
  for (Int r : residues)
    if (r < 0 || r >= modulus) invalid(entry, "basis.residues", "residue " + std::to_string(r) + " outside [0, modulus)");
  try {
    return EventuallyPeriodicSet::make(std::move(exceptional), threshold, modulus, residues);
  } catch (const Error& e) {
    invalid(entry, "basis.exceptional", e.what());
  }
}

json set_literal(const EventuallyPeriodicSet& s) {
  return json{{"exceptional", s.exceptional()},
              {"threshold", s.threshold()},
              {"modulus", s.modulus()},
              {"residues", s.residues()}};
}

}  // namespace

int default_order_cap() {
  if (const char* env = std::getenv("ADDBASIS_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 100000) return static_cast<int>(v);
  }
  return kDefaultOrderCap;
}

std::vector<CorpusEntry> parse_corpus(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
  const json* list = &doc;
  if (doc.is_object()) {
    auto it = doc.find("entries");
    if (it == doc.end()) throw Error(Errc::ParseError, "corpus object has no 'entries' array");
    list = &*it;
  }
  if (!list->is_array()) throw Error(Errc::ParseError, "corpus must be an array of entries");

  const int fallback_cap = default_order_cap();
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const json& obj = (*list)[i];
    const std::string label = "#" + std::to_string(i);
    if (!obj.is_object()) parse_fail(label, "entry must be an object");
    const json& name = require(obj, "name", label);
    if (!name.is_string()) parse_fail(label, "field 'name' must be a string");

    CorpusEntry e;
    e.name = name.get<std::string>();
    e.basis = parse_set_literal(require(obj, "basis", e.name), e.name);
    e.remove = FiniteIntSet(as_int_array(require(obj, "remove", e.name), e.name, "remove"));
    e.order_cap = fallback_cap;
    if (auto it = obj.find("order_cap"); it != obj.end()) {
      const Int cap = as_int(*it, e.name, "order_cap");
      if (cap < 1 || cap > 100000) invalid(e.name, "order_cap", "must be in [1, 100000]");
      e.order_cap = static_cast<int>(cap);
    }
    if (auto it = obj.find("window"); it != obj.end()) {
      e.window = as_int(*it, e.name, "window");
      if (e.window < 1) invalid(e.name, "window", "must be positive");
    }
    if (auto it = obj.find("ap_flag"); it != obj.end() && !it->is_null()) {
      if (!it->is_boolean()) parse_fail(e.name, "field 'ap_flag' must be a boolean");
      e.ap_flag = it->get<bool>();
    }
    if (e.remove.empty()) invalid(e.name, "remove", "must be nonempty");
    for (Int x : e.remove.elements())
      if (!e.basis.contains(x)) invalid(e.name, "remove", "element " + std::to_string(x) + " is not in the basis");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

std::string emit_corpus(const std::vector<CorpusEntry>& entries) {
  json list = json::array();
  for (const auto& e : entries) {
    json obj{{"name", e.name},
             {"basis", set_literal(e.basis)},
             {"remove", e.remove.elements()},
             {"order_cap", e.order_cap},
             {"window", e.window}};
    if (e.ap_flag) obj["ap_flag"] = *e.ap_flag;
    list.push_back(std::move(obj));
  }
  return json{{"entries", std::move(list)}}.dump(2) + "\n";
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  while (static_cast<int>(out.size()) < count) {
    const auto basis = random_infinite_set(rng);
    if (eventual_gcd(basis) != 1) continue;
    try {
      (void)order(basis, 8);
    } catch (const Error&) {
      continue;
    }

    const auto pool = enumerate_window(basis, basis.min(), basis.threshold() + 2 * basis.modulus()).elements();
    std::vector<Int> picked;
    const Int want = draw_between(rng, 1, 4);
    for (Int i = 0; i < want && !pool.empty(); ++i) picked.push_back(pool[rng() % pool.size()]);

    CorpusEntry e;
    std::ostringstream name;
    name << "gen_s" << seed << "_" << std::string(3 - std::min<std::size_t>(3, std::to_string(out.size()).size()), '0')
         << out.size();
    e.name = name.str();
    e.basis = basis;
    e.remove = FiniteIntSet(std::move(picked));
    e.order_cap = kDefaultOrderCap;
    e.ap_flag = is_arithmetic_progression(e.remove);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace addbasis
