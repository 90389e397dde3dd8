// Copyright 2026 The resfin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "resfin/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "resfin/error.hpp"

namespace resfin {

namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxExponent = 4096;

class EntryParser {
 public:
  EntryParser(std::string_view text, const BigInt& ch, std::span<const std::string> vars)
      : s_(text), ch_(ch), vars_(vars) {}

  RatFunc parse() {
    MultiPoly num = expr();
    skip();
    if (pos_ == s_.size()) return RatFunc(std::move(num));
    if (s_[pos_] != '/') fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    const std::size_t slash = pos_++;
    MultiPoly den = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    if (den.is_zero()) throw ParseError("zero denominator", slash);
    return RatFunc(std::move(num), std::move(den));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool starts_base() const {
    if (pos_ >= s_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    skip();
    bool negate = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) negate = s_[pos_++] == '-';
    MultiPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) return acc;
      const bool minus = s_[pos_++] == '-';
      MultiPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
      } else if (!starts_base()) {
        return acc;
      }
      acc *= factor();
    }
  }

  MultiPoly factor() {
    MultiPoly b = base();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      const std::string d = digits();
      if (d.empty()) fail("expected exponent");
      if (d.size() > 6 || std::stoull(d) > kMaxExponent) {
        throw ParseError("exponent too large", at);
      }
      b = b.pow(std::stoull(d));
    }
    return b;
  }

  MultiPoly base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (std::isdigit(c)) {
      return MultiPoly::constant(ch_, vars_.size(), BigInt(digits()));
    }
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return MultiPoly::variable(ch_, vars_.size(), i);
      }
      throw ParseError("unknown variable '" + name + "'", start);
    }
    if (c == '(') {
      ++pos_;
      MultiPoly e = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    fail("expected number, variable or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const BigInt& ch_;
  std::span<const std::string> vars_;
};

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::string json_string(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InvalidArgument(where + ": expected a string");
}

BigInt json_bigint(const json& j, const std::string& where) {
  const std::string s = json_string(j, where);
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw InvalidArgument(where + ": bad integer '" + s + "'");
  return v;
}

std::uint64_t json_u64(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
  throw InvalidArgument(where + ": expected a nonnegative integer");
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": malformed JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
}

json bigint_list(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const BigInt& c : v) out.push_back(resfin::to_string(c));
  return out;
}

std::vector<BigInt> bigint_list_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidArgument(where + ": expected an array");
  std::vector<BigInt> out;
  for (const json& e : j) out.push_back(json_bigint(e, where));
  return out;
}

}  // namespace

RatFunc parse_entry(std::string_view text, const BigInt& characteristic,
                    std::span<const std::string> variables) {
  return EntryParser(text, characteristic, variables).parse();
}

Word parse_word(const GroupSpec& spec, std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view token = text.substr(start, pos - start);
    const std::size_t caret = token.find('^');
    const std::string label(token.substr(0, caret));
    if (label.empty()) throw ParseError("empty generator label", start);
    std::int64_t power = 1;
    if (caret != std::string_view::npos) {
      std::string_view suffix = token.substr(caret + 1);
      const bool negative = !suffix.empty() && suffix.front() == '-';
      if (negative) suffix.remove_prefix(1);
      auto k = parse_u64(suffix);
      if (!k || *k > 1000000) throw ParseError("bad exponent in word", start + caret + 1);
      power = negative ? -static_cast<std::int64_t>(*k) : static_cast<std::int64_t>(*k);
    }
    const std::size_t idx = spec.index_of(label);
    const std::size_t letter = power < 0 ? spec.inverse_of(idx) : idx;
    for (std::int64_t i = 0; i < (power < 0 ? -power : power); ++i) w.letters.push_back(letter);
  }
  return w;
}

Budgets budgets_from_env(
    const std::function<std::optional<std::string>(const std::string&)>& env) {
  auto get = [&](const char* name) -> std::optional<std::uint64_t> {
    auto v = env(name);
    if (!v) return std::nullopt;
    auto n = parse_u64(*v);
    if (!n) throw InvalidArgument(std::string(name) + ": expected a nonnegative integer");
    return n;
  };
  Budgets b;
  b.max_elements = get("RESFIN_MAX_ELEMENTS");
  b.closure_budget = get("RESFIN_CLOSURE_BUDGET");
  b.prime_bound = get("RESFIN_PRIME_BOUND");
  b.degree_bound = get("RESFIN_DEGREE_BOUND");
  return b;
}

ResolvedBudgets resolve_budgets(
    const Budgets& cli, const Budgets& spec,
    const std::function<std::optional<std::string>(const std::string&)>& env) {
  const Budgets e = budgets_from_env(env);
  ResolvedBudgets r;
  auto pick = [](std::uint64_t& out, const std::optional<std::uint64_t>& a,
                 const std::optional<std::uint64_t>& b, const std::optional<std::uint64_t>& c) {
    if (a) out = *a;
    else if (b) out = *b;
    else if (c) out = *c;
  };
  pick(r.max_elements, cli.max_elements, spec.max_elements, e.max_elements);
  pick(r.closure_budget, cli.closure_budget, spec.closure_budget, e.closure_budget);
  pick(r.prime_bound, cli.prime_bound, spec.prime_bound, e.prime_bound);
  pick(r.degree_bound, cli.degree_bound, spec.degree_bound, e.degree_bound);
  return r;
}

GroupSpecFile parse_spec_file(const std::string& json_text) {
  const json j = parse_json(json_text, "spec");
  if (!j.is_object()) throw InvalidArgument("spec: expected a JSON object");
  GroupSpecFile f;
  f.characteristic = json_bigint(require(j, "characteristic", "spec"), "spec.characteristic");
  const json& vars = require(j, "variables", "spec");
  if (!vars.is_array()) throw InvalidArgument("spec.variables: expected an array");
  for (const json& v : vars) f.variables.push_back(json_string(v, "spec.variables"));
  const json& gens = require(j, "generators", "spec");
  if (!gens.is_array() || gens.empty()) {
    throw InvalidArgument("spec.generators: expected a nonempty array");
  }
  for (const json& g : gens) {
    GeneratorEntry e;
    e.label = json_string(require(g, "label", "spec.generators"), "spec.generators.label");
    const std::string where = "generator '" + e.label + "'";
    const json& rows = require(g, "matrix", where);
    if (!rows.is_array() || rows.empty()) throw InvalidArgument(where + ": matrix must be nonempty");
    for (const json& row : rows) {
      if (!row.is_array() || row.size() != rows.size()) {
        throw InvalidArgument(where + ": matrix must be square");
      }
      std::vector<std::string> r;
      for (const json& x : row) r.push_back(json_string(x, where));
      e.matrix.push_back(std::move(r));
    }
    f.generators.push_back(std::move(e));
  }
  if (j.contains("budgets")) {
    const json& b = j.at("budgets");
    if (!b.is_object()) throw InvalidArgument("spec.budgets: expected an object");
    auto opt = [&](const char* key) -> std::optional<std::uint64_t> {
      if (!b.contains(key)) return std::nullopt;
      return json_u64(b.at(key), std::string("spec.budgets.") + key);
    };
    f.budgets.max_elements = opt("max_elements");
    f.budgets.closure_budget = opt("closure_budget");
    f.budgets.prime_bound = opt("prime_bound");
    f.budgets.degree_bound = opt("degree_bound");
  }
  return f;
}

GroupSpecFile load_spec_file(const std::string& path) { return parse_spec_file(read_file(path)); }

GroupSpec to_group_spec(const GroupSpecFile& file) {
  if (file.characteristic < 0 ||
      (file.characteristic != 0 && !is_prime(file.characteristic))) {
    throw InvalidArgument("characteristic must be 0 or a prime");
  }
  std::vector<Generator> gens;
  for (const GeneratorEntry& e : file.generators) {
    const std::size_t m = e.matrix.size();
    std::vector<RatFunc> entries;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        try {
          entries.push_back(parse_entry(e.matrix[i][j], file.characteristic, file.variables));
        } catch (const ParseError& pe) {
          throw ParseError("generator '" + e.label + "' entry [" + std::to_string(i) + "][" +
                               std::to_string(j) + "]: " + pe.detail(),
                           pe.offset());
        }
      }
    }
    gens.push_back({e.label, FieldMatrix(m, std::move(entries))});
  }
  return GroupSpec(file.characteristic, file.variables, std::move(gens));
}

std::string canonical_spec(const GroupSpecFile& file) {
  json j;
  j["characteristic"] = resfin::to_string(file.characteristic);
  j["variables"] = file.variables;
  json gens = json::array();
  for (const GeneratorEntry& e : file.generators) {
    json rows = json::array();
    for (const auto& row : e.matrix) {
      json r = json::array();
      for (const std::string& x : row) {
        r.push_back(parse_entry(x, file.characteristic, file.variables).to_string(file.variables));
      }
      rows.push_back(std::move(r));
    }
    gens.push_back({{"label", e.label}, {"matrix", std::move(rows)}});
  }
  j["generators"] = std::move(gens);
  return j.dump();
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw ArithmeticFault("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string spec_fingerprint(const GroupSpecFile& file) { return sha256_hex(canonical_spec(file)); }

std::string serialize_witness(const GroupSpec& spec, const WitnessFile& file) {
  const WitnessRecord& r = file.record;
  const HomProvenance& pv = r.hom.provenance;
  json prov;
  prov["exponents"] = pv.exponents;
  prov["method"] = pv.method;
  prov["point"] = resfin::to_string(pv.point);
  prov["substituted_degree"] = pv.substituted_degree;
  prov["substituted_max_coefficient"] = resfin::to_string(pv.substituted_max_coefficient);
  prov["value"] = resfin::to_string(pv.value);
  prov["degree_bound"] = pv.degree_bound;
  json images = json::array();
  for (const ExtFieldElem& e : r.hom.images) images.push_back(bigint_list(e.coeffs));
  json hom;
  hom["path"] = to_string(r.hom.path);
  hom["p"] = resfin::to_string(r.hom.p);
  hom["modulus"] = bigint_list(r.hom.modulus.coeffs());
  hom["images"] = std::move(images);
  hom["provenance"] = std::move(prov);

  json j;
  j["format"] = "resfin-witness-1";
  j["spec_fingerprint"] = file.spec_fingerprint;
  j["word"] = r.word;
  j["word_length"] = r.word_length;
  j["entry"] = {r.entry_row, r.entry_col};
  j["target"] = r.target.to_string(spec.variables());
  j["hom"] = std::move(hom);
  j["field_size"] = resfin::to_string(r.field_size);
  j["gl_bound"] = resfin::to_string(r.gl_bound);
  if (r.image_order) {
    j["image_order"] = {{"order", resfin::to_string(r.image_order->order)},
                        {"exact", r.image_order->exact}};
  } else {
    j["image_order"] = nullptr;
  }
  j["verified"] = r.verified;
  return j.dump(2) + "\n";
}

WitnessFile parse_witness(const GroupSpec& spec, const std::string& json_text) {
  const json j = parse_json(json_text, "witness");
  const std::string w = "witness";
  if (json_string(require(j, "format", w), w) != "resfin-witness-1") {
    throw InvalidArgument("witness: unsupported format");
  }
  WitnessFile f;
  f.spec_fingerprint = json_string(require(j, "spec_fingerprint", w), w);
  WitnessRecord& r = f.record;
  const json& word = require(j, "word", w);
  if (!word.is_array()) throw InvalidArgument("witness.word: expected an array");
  for (const json& l : word) r.word.push_back(json_string(l, "witness.word"));
  r.word_length = json_u64(require(j, "word_length", w), "witness.word_length");
  const json& entry = require(j, "entry", w);
  if (!entry.is_array() || entry.size() != 2) throw InvalidArgument("witness.entry: expected [i, j]");
  r.entry_row = json_u64(entry[0], "witness.entry");
  r.entry_col = json_u64(entry[1], "witness.entry");
  const RatFunc target = parse_entry(json_string(require(j, "target", w), w),
                                     spec.characteristic(), spec.variables());
  if (!target.is_polynomial()) throw InvalidArgument("witness.target: expected a polynomial");
  r.target = target.num();

  const json& hom = require(j, "hom", w);
  r.hom.path = hom_path_from_string(json_string(require(hom, "path", "witness.hom"), "witness.hom"));
  r.hom.p = json_bigint(require(hom, "p", "witness.hom"), "witness.hom.p");
  if (r.hom.p < 2) throw InvalidArgument("witness.hom.p: expected a prime");
  r.hom.modulus = UniPoly(r.hom.p, bigint_list_from(require(hom, "modulus", "witness.hom"),
                                                    "witness.hom.modulus"));
  const json& images = require(hom, "images", "witness.hom");
  if (!images.is_array()) throw InvalidArgument("witness.hom.images: expected an array");
  for (const json& e : images) {
    r.hom.images.push_back({bigint_list_from(e, "witness.hom.images")});
  }
  const json& prov = require(hom, "provenance", "witness.hom");
  HomProvenance& pv = r.hom.provenance;
  for (const json& e : require(prov, "exponents", "witness.hom.provenance")) {
    pv.exponents.push_back(json_u64(e, "witness.hom.provenance.exponents"));
  }
  pv.method = json_string(require(prov, "method", "provenance"), "provenance.method");
  pv.point = json_bigint(require(prov, "point", "provenance"), "provenance.point");
  const json& sd = require(prov, "substituted_degree", "provenance");
  if (!sd.is_number_integer()) throw InvalidArgument("provenance.substituted_degree: expected an integer");
  pv.substituted_degree = sd.get<long>();
  pv.substituted_max_coefficient = json_bigint(
      require(prov, "substituted_max_coefficient", "provenance"), "provenance");
  pv.value = json_bigint(require(prov, "value", "provenance"), "provenance.value");
  pv.degree_bound = json_u64(require(prov, "degree_bound", "provenance"), "provenance.degree_bound");

  r.field_size = json_bigint(require(j, "field_size", w), "witness.field_size");
  r.gl_bound = json_bigint(require(j, "gl_bound", w), "witness.gl_bound");
  const json& io = require(j, "image_order", w);
  if (!io.is_null()) {
    const json& ex = require(io, "exact", "witness.image_order");
    if (!ex.is_boolean()) throw InvalidArgument("witness.image_order.exact: expected a boolean");
    r.image_order = ImageOrder{json_bigint(require(io, "order", "witness.image_order"),
                                           "witness.image_order.order"),
                               ex.get<bool>()};
  }
  const json& ver = require(j, "verified", w);
  if (!ver.is_boolean()) throw InvalidArgument("witness.verified: expected a boolean");
  r.verified = ver.get<bool>();
  return f;
}

std::string profile_csv(const FarbProfile& profile) {
  std::ostringstream os;
  os << "n,ball_size,max_gl_bound,max_image_order,max_d_reduction,exhaustive_flag\n";
  for (const ProfileRow& r : profile.rows) {
    os << r.radius << ',' << r.ball_size << ',' << resfin::to_string(r.max_gl_bound) << ','
       << (r.max_image_order ? resfin::to_string(*r.max_image_order) : "") << ','
       << (r.max_d_reduction ? resfin::to_string(*r.max_d_reduction) : "") << ','
       << (r.exhaustive ? 1 : 0) << '\n';
  }
  return os.str();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> read_threshold_csv(
    const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) {
      while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) cell.pop_back();
      out.push_back(cell);
    }
    if (!l.empty() && l.back() == ',') out.emplace_back();
    return out;
  };
  if (!std::getline(in, line)) throw ParseError("empty CSV", 0);
  const auto header = split(line);
  auto column = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  };
  const auto n_col = column("n");
  if (!n_col) throw ParseError("CSV has no 'n' column", 0);
  std::optional<std::size_t> f_col;
  for (const char* name : {"farb_z", "max_d_reduction", "max_image_order", "max_gl_bound"}) {
    if ((f_col = column(name))) break;
  }
  if (!f_col) throw ParseError("CSV has no value column", 0);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::size_t offset = line.size() + 1;
  while (std::getline(in, line)) {
    const auto cells = split(line);
    if (line.empty()) {
      offset += 1;
      continue;
    }
    if (cells.size() <= std::max(*n_col, *f_col)) throw ParseError("short CSV row", offset);
    if (!cells[*f_col].empty()) {
      auto n = parse_u64(cells[*n_col]);
      auto f = parse_u64(cells[*f_col]);
      if (!n || !f) throw ParseError("bad number in CSV row", offset);
      out.emplace_back(*n, *f);
    }
    offset += line.size() + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << data;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace resfin
