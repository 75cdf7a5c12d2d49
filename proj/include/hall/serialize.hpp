#pragma once
// JSON formats shared by the CLI and the persistence layer: configs, the
// iso-class cache, algebra elements and words, complexes, reduced forms, and
// check reports. All rationals cross the boundary as exact "num/den" strings;
// counts that fit 64 bits are emitted as JSON integers, larger ones as
// decimal strings.

#include <optional>
#include <string>

#include <json.hpp>

#include "hall/complexes.hpp"
#include "hall/dhall.hpp"
#include "hall/mhall.hpp"
#include "hall/quiverrep.hpp"
#include "hall/verify.hpp"

namespace hall::io {

using Json = nlohmann::ordered_json;

inline constexpr int kCacheFormatVersion = 1;

struct Config {
    quiverrep::Quiver quiver;
    std::uint32_t q = 2;
    std::vector<int> caps;
    int total_dim_cap = 0;
    std::string cache_path; // empty: no persistence
    std::uint64_t seed = 1;
    Guards guards;
};

Config config_from_json(const Json& j);
Config load_config_file(const std::string& path);

Json int_json(const Int& v);
Int int_from_json(const Json& j);

Json matrix_json(const ffla::FqMatrix& m);
ffla::FqMatrix matrix_from_json(const Json& j);

Json rep_json(const quiverrep::Representation& r);
quiverrep::Representation rep_from_json(const Json& j);

// ---- iso-class cache ----

Json table_json(const quiverrep::IsoClassTable& table);
// Atomic store: write to a temp file in the same directory, then rename.
void store_table(const quiverrep::IsoClassTable& table, const std::string& path);
// Returns the table when the cache is present, parseable and key-matching.
// A corrupt or mismatching cache yields nullopt with a warning message; a
// cache written by a newer format version raises ParseError.
std::optional<quiverrep::IsoClassTable> load_table(const quiverrep::Cat& cat,
                                                   const std::vector<int>& caps, int total_cap,
                                                   const Guards& guards, const std::string& path,
                                                   std::string* warning);

// ---- words and elements ----

Json word_json(const mhall::NormalWord& w);
mhall::NormalWord word_from_json(const Json& j, int vertices);
Json torus_json(const mhall::TorusElement& t);
mhall::TorusElement torus_from_json(const Json& j, int vertices);
Json element_json(const mhall::Element& e);
mhall::Element element_from_json(const Json& j, int vertices);
Json derived_word_json(const dhall::DerivedWord& w);
dhall::DerivedWord derived_word_from_json(const Json& j);
Json dh_element_json(const dhall::DHElement& e);
dhall::DHElement dh_element_from_json(const Json& j);

// ---- complexes ----

Json complex_json(const complexes::BoundedComplex& X);
complexes::BoundedComplex complex_from_json(const quiverrep::Cat& cat, const Json& j);

Json reduced_json(const complexes::ReducedForm& rf);

// ---- reports ----

Json report_json(const verify::CheckReport& rep, bool include_timing);

void atomic_write(const std::string& path, const std::string& contents);
Json parse_file(const std::string& path);

} // namespace hall::io
