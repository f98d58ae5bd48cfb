#include "fva/signature.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "fva/errors.hpp"

namespace fva {

bool Weight::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool Weight::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c >= 0; });
}

std::int64_t Weight::total() const {
  std::int64_t t = 0;
  for (auto c : coeffs_) t += c;
  return t;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& c : a.coeffs_) c *= k;
  return a;
}

Signature::Signature(std::vector<std::string> generators, std::vector<std::vector<std::int64_t>> locality)
    : names_(std::move(generators)) {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (names_[i].empty()) throw ValidationError("empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ValidationError("duplicate generator name '" + names_[i] + "'");
    }
  }
  if (locality.size() != n) {
    throw ValidationError("locality matrix has " + std::to_string(locality.size()) + " rows, expected " +
                          std::to_string(n));
  }
  locality_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (locality[i].size() != n) {
      throw ValidationError("locality row " + std::to_string(i) + " has " + std::to_string(locality[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    locality_.insert(locality_.end(), locality[i].begin(), locality[i].end());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (locality[i][j] != locality[j][i]) {
        throw ValidationError("locality matrix is not symmetric: N(" + names_[i] + "," + names_[j] +
                              ") != N(" + names_[j] + "," + names_[i] + ")");
      }
    }
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ValidationError("unknown generator '" + std::string(name) + "'");
}

namespace {

std::int64_t json_integer(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(std::numeric_limits<std::int64_t>::max())) {
      throw ValidationError(where + ": integer exceeds the 64-bit range");
    }
    return v.get<std::int64_t>();
  }
  if (v.is_number_float()) throw ValidationError(where + ": expected an integer (out of 64-bit range or fractional)");
  throw ValidationError(where + ": expected an integer");
}

}  // namespace

Signature load_signature(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed signature document: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ValidationError("signature document must be an object");
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw ValidationError("signature document needs a 'generators' array");
  }
  if (!doc.contains("locality") || !doc["locality"].is_array()) {
    throw ValidationError("signature document needs a 'locality' array");
  }
  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw ValidationError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < doc["locality"].size(); ++i) {
    const auto& row = doc["locality"][i];
    if (!row.is_array()) throw ValidationError("locality row " + std::to_string(i) + " is not an array");
    std::vector<std::int64_t> r;
    for (std::size_t j = 0; j < row.size(); ++j) {
      r.push_back(json_integer(row[j], "locality[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    rows.push_back(std::move(r));
  }
  return Signature(std::move(names), std::move(rows));
}

Signature load_signature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open signature file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_signature(buf.str());
}

std::int64_t pairing(const Signature& sig, const Weight& l, const Weight& m) {
  std::int64_t sum = 0;
  for (std::size_t a = 0; a < sig.size(); ++a) {
    if (l[a] == 0) continue;
    for (std::size_t b = 0; b < sig.size(); ++b) {
      if (m[b] != 0) sum += l[a] * m[b] * sig.gram(a, b);
    }
  }
  return sum;
}

std::int64_t d2_min(const Signature& sig, const Weight& l) { return pairing(sig, l, l); }

int parity(const Signature& sig, const Weight& l) {
  std::int64_t p = 0;
  for (std::size_t a = 0; a < sig.size(); ++a) p += l[a] * sig.locality(a, a);
  return static_cast<int>(((p % 2) + 2) % 2);
}

Weight parse_weight(const Signature& sig, std::string_view text) {
  Weight w = sig.zero_weight();
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty weight", pos);
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' in weight", pos);
    }
    std::int64_t count = 1;
    bool has_count = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      count = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        count = count * 10 + (text[pos] - '0');
        ++pos;
      }
      has_count = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    if (start == pos) {
      if (has_count && count == 0 && first) {
        first = false;
        continue;  // the literal "0"
      }
      throw ParseError("expected generator name in weight", pos);
    }
    w[sig.index(text.substr(start, pos - start))] += sign * count;
    first = false;
  }
  return w;
}

std::string to_string(const Signature& sig, const Weight& w) {
  std::string out;
  for (std::size_t a = 0; a < sig.size(); ++a) {
    std::int64_t c = w[a];
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1) out += std::to_string(m);
    out += sig.name(a);
  }
  return out.empty() ? "0" : out;
}

}  // namespace fva
