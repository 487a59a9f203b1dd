#include "posethom/document.hpp"

#include "posethom/error.hpp"

#include <boost/crc.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace posethom {

using Json = nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void shape_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": expected " + what);
}

void only_fields(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw Error(ErrorCode::UnknownField, "unknown field '" + key + "' in " + where);
    }
  }
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) shape_error(where, "a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) shape_error(where, "a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string integer_text(const Json& e, const std::string& where) {
  if (e.is_number_integer()) return e.dump();
  if (e.is_string()) {
    const auto s = e.get<std::string>();
    try {
      return Integer::parse(s).str();
    } catch (const Error&) {
      shape_error(where, "an integer, got '" + s + "'");
    }
  }
  shape_error(where, "an integer");
}

FunctorSection parse_functor(const Json& j) {
  if (!j.is_object()) shape_error("functor", "an object");
  only_fields(j, {"direction", "ranks", "maps"}, "functor");
  FunctorSection f;
  if (!j.contains("direction") || !j["direction"].is_string()) shape_error("functor.direction", "a string");
  f.direction = j["direction"].get<std::string>();
  if (f.direction != "covariant" && f.direction != "contravariant") {
    shape_error("functor.direction", "\"covariant\" or \"contravariant\", got \"" + f.direction + "\"");
  }
  if (!j.contains("ranks") || !j["ranks"].is_object()) shape_error("functor.ranks", "an object");
  for (const auto& [key, value] : j["ranks"].items()) {
    if (!value.is_number_unsigned()) shape_error("functor.ranks." + key, "a nonnegative integer");
    f.ranks.emplace_back(key, value.get<std::size_t>());
  }
  if (j.contains("maps")) {
    if (!j["maps"].is_object()) shape_error("functor.maps", "an object");
    for (const auto& [key, value] : j["maps"].items()) {
      const std::string where = "functor.maps." + key;
      if (!value.is_array()) shape_error(where, "a list of rows");
      std::vector<std::vector<std::string>> rows;
      for (const auto& row : value) {
        if (!row.is_array()) shape_error(where, "a list of rows");
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(integer_text(e, where));
        rows.push_back(std::move(r));
      }
      f.maps.emplace_back(key, std::move(rows));
    }
  }
  return f;
}

template <typename Fn>
auto as_validation(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string(to_string(e.code())) + ": " + e.what(), e.code());
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

SpaceDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
  }
  if (!j.is_object()) shape_error("document", "a JSON object");
  only_fields(j, {"points", "cover", "topology", "functor"}, "document");

  SpaceDocument doc;
  if (j.contains("points") || j.contains("cover")) {
    if (!j.contains("points")) shape_error("document", "a 'points' field next to 'cover'");
    if (!j.contains("cover")) shape_error("document", "a 'cover' field next to 'points'");
    RawSpace raw;
    raw.points = string_list(j["points"], "points");
    if (!j["cover"].is_object()) shape_error("cover", "an object mapping set names to point lists");
    for (const auto& [name, members] : j["cover"].items()) {
      raw.cover.emplace_back(name, string_list(members, "cover." + name));
    }
    doc.space = std::move(raw);
  }
  if (j.contains("topology")) {
    if (!j["topology"].is_array()) shape_error("topology", "a list of opens");
    std::vector<std::vector<std::string>> opens;
    for (const auto& open : j["topology"]) opens.push_back(string_list(open, "topology"));
    doc.topology = std::move(opens);
  }
  if (j.contains("functor")) doc.functor = parse_functor(j["functor"]);
  return doc;
}

std::string emit_document(const SpaceDocument& doc) {
  Json j = Json::object();
  if (doc.space) {
    j["points"] = doc.space->points;
    Json cover = Json::object();
    for (const auto& [name, members] : doc.space->cover) cover[name] = members;
    j["cover"] = cover;
  }
  if (doc.topology) j["topology"] = *doc.topology;
  if (doc.functor) {
    Json f = Json::object();
    f["direction"] = doc.functor->direction;
    Json ranks = Json::object();
    for (const auto& [k, r] : doc.functor->ranks) ranks[k] = r;
    f["ranks"] = ranks;
    Json maps = Json::object();
    for (const auto& [k, rows] : doc.functor->maps) {
      Json m = Json::array();
      for (const auto& row : rows) {
        Json r = Json::array();
        for (const auto& e : row) {
          const Integer v = Integer::parse(e);
          if (v.fits_long()) {
            r.push_back(v.to_long());
          } else {
            r.push_back(e);
          }
        }
        m.push_back(r);
      }
      maps[k] = m;
    }
    f["maps"] = maps;
    j["functor"] = f;
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint32_t crc32(const std::string& bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

std::string signature_key(const StructuredSpace& space, const Quotient& q, std::size_t cls) {
  return signature_name(space, q.signatures[cls]);
}

std::size_t resolve_signature_key(const StructuredSpace& space, const Quotient& q, const std::string& key) {
  const std::string k = trim(key);
  if (k.size() < 2 || k.front() != '[' || k.back() != ']') {
    throw Error(ErrorCode::UnknownSignature, "'" + key + "' is not a bracketed signature like [U1,U2]");
  }
  Signature sig;
  std::stringstream ss(k.substr(1, k.size() - 2));
  std::string name;
  while (std::getline(ss, name, ',')) {
    const auto idx = space.cover_index(trim(name));
    if (!idx) throw Error(ErrorCode::UnknownSignature, "signature '" + key + "' names unknown cover set '" + trim(name) + "'");
    sig.indices.push_back(*idx);
  }
  std::sort(sig.indices.begin(), sig.indices.end());
  sig.indices.erase(std::unique(sig.indices.begin(), sig.indices.end()), sig.indices.end());
  const auto it = std::find(q.signatures.begin(), q.signatures.end(), sig);
  if (it == q.signatures.end()) {
    throw Error(ErrorCode::UnknownSignature, "signature '" + key + "' matches no class of the quotient");
  }
  return static_cast<std::size_t>(it - q.signatures.begin());
}

PosetFunctor resolve_functor(const FunctorSection& section, const StructuredSpace& space, const Quotient& q) {
  PosetFunctor f;
  f.variance = section.direction == "covariant" ? Variance::Covariant : Variance::Contravariant;
  const std::size_t n = q.poset.size();
  std::vector<std::optional<std::size_t>> ranks(n);
  for (const auto& [key, r] : section.ranks) {
    const std::size_t cls = resolve_signature_key(space, q, key);
    if (ranks[cls]) throw Error(ErrorCode::ParseError, "rank for " + signature_key(space, q, cls) + " given twice");
    ranks[cls] = r;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!ranks[x]) throw Error(ErrorCode::MissingRank, "functor gives no rank for " + signature_key(space, q, x));
    f.rank_of.push_back(*ranks[x]);
  }
  for (const auto& [key, rows] : section.maps) {
    const auto lt = key.find('<');
    if (lt == std::string::npos) {
      throw Error(ErrorCode::ParseError, "map key '" + key + "' must look like '[U1] < [U1,U2]'");
    }
    const std::size_t x = resolve_signature_key(space, q, key.substr(0, lt));
    const std::size_t y = resolve_signature_key(space, q, key.substr(lt + 1));
    const bool co = f.variance == Variance::Covariant;
    const auto r = static_cast<Eigen::Index>(co ? f.rank_of[y] : f.rank_of[x]);
    const auto c = static_cast<Eigen::Index>(co ? f.rank_of[x] : f.rank_of[y]);
    // A matrix with no rows is written [] whatever its column count.
    const bool fits = static_cast<Eigen::Index>(rows.size()) == r &&
                      std::all_of(rows.begin(), rows.end(),
                                  [&](const auto& row) { return static_cast<Eigen::Index>(row.size()) == c; });
    if (!fits) {
      throw Error(ErrorCode::ShapeMismatch, "map '" + key + "' must be " + std::to_string(r) + "x" + std::to_string(c));
    }
    IntMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index k = 0; k < c; ++k) m(i, k) = Integer::parse(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    }
    if (!f.map_on.emplace(ElementPair{x, y}, std::move(m)).second) {
      throw Error(ErrorCode::ParseError, "map '" + key + "' given twice");
    }
  }
  return f;
}

FunctorSection describe_functor(const PosetFunctor& f, const StructuredSpace& space, const Quotient& q) {
  FunctorSection s;
  s.direction = f.variance == Variance::Covariant ? "covariant" : "contravariant";
  for (std::size_t x = 0; x < f.rank_of.size(); ++x) s.ranks.emplace_back(signature_key(space, q, x), f.rank_of[x]);
  for (const auto& [pair, m] : f.map_on) {
    std::vector<std::vector<std::string>> rows;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      std::vector<std::string> row;
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
      rows.push_back(std::move(row));
    }
    s.maps.emplace_back(signature_key(space, q, pair.first) + " < " + signature_key(space, q, pair.second), std::move(rows));
  }
  return s;
}

LoadedSpace load_space_text(const std::string& text) {
  const SpaceDocument doc = parse_document(text);
  if (!doc.space) throw Error(ErrorCode::ParseError, "document: expected 'points' and 'cover' fields");
  return as_validation([&] {
    LoadedSpace out{validate_space(*doc.space), {}, std::nullopt, std::nullopt, crc32(text)};
    out.quotient = quotient_poset(out.space);
    if (doc.topology) {
      std::vector<ElementSet> opens;
      for (const auto& open : *doc.topology) {
        ElementSet s;
        for (const auto& p : open) {
          const auto idx = out.space.point_index(p);
          if (!idx) throw Error(ErrorCode::UnknownPoint, "topology names unknown point '" + p + "'");
          s.push_back(*idx);
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        opens.push_back(std::move(s));
      }
      out.topology = FiniteTopology::make(out.space.points(), std::move(opens));
    }
    if (doc.functor) out.functor = resolve_functor(*doc.functor, out.space, out.quotient);
    return out;
  });
}

LoadedSpace load_space(const std::string& path) { return load_space_text(read_file(path)); }

SpaceDocument generate_random_space(std::uint64_t seed, std::size_t n_points, std::size_t n_sets, bool surjective) {
  if (n_points < 1 || n_sets < 1) {
    throw Error(ErrorCode::InfeasibleRequest, "need at least one point and one cover set");
  }
  if (n_sets > 30) throw Error(ErrorCode::InfeasibleRequest, "at most 30 cover sets are supported");
  const std::uint64_t signatures = (std::uint64_t{1} << n_sets) - 1;
  if (surjective && n_points < signatures) {
    throw Error(ErrorCode::InfeasibleRequest, "a surjective space with " + std::to_string(n_sets) + " sets needs at least " +
                                                  std::to_string(signatures) + " points, got " + std::to_string(n_points));
  }
  // Plain modulo draws keep the output identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> mask(n_points);
  std::size_t next = 0;
  if (surjective) {
    for (std::uint64_t m = 1; m <= signatures; ++m) mask[next++] = m;
  }
  for (; next < n_points; ++next) mask[next] = 1 + rng() % signatures;
  if (!surjective && n_points >= n_sets) {
    for (std::size_t i = 0; i < n_sets; ++i) mask[i] |= std::uint64_t{1} << i;  // no empty cover set
  }
  for (std::size_t i = n_points; i > 1; --i) std::swap(mask[i - 1], mask[rng() % i]);

  RawSpace raw;
  for (std::size_t i = 0; i < n_points; ++i) raw.points.push_back("p" + std::to_string(i));
  for (std::size_t s = 0; s < n_sets; ++s) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < n_points; ++i) {
      if (mask[i] >> s & 1U) members.push_back(raw.points[i]);
    }
    raw.cover.emplace_back("U" + std::to_string(s + 1), std::move(members));
  }
  SpaceDocument doc;
  doc.space = std::move(raw);
  return doc;
}

}  // namespace posethom
