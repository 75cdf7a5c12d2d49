#include "hall/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace hall::io {

namespace {

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

Config config_from_json(const Json& j) {
    Config cfg;
    const Json& qj = need(j, "quiver");
    int vertices = need(qj, "vertices").get<int>();
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : need(qj, "arrows")) {
        if (!a.is_array() || a.size() != 2) throw ParseError("arrow must be a [source,target] pair");
        int s = a[0].get<int>(), t = a[1].get<int>();
        if (s < 1 || t < 1 || s > vertices || t > vertices)
            throw ParseError("arrow endpoints must be 1-based vertex indices");
        arrows.emplace_back(s - 1, t - 1);
    }
    cfg.quiver = quiverrep::Quiver(vertices, std::move(arrows));
    cfg.q = need(j, "q").get<std::uint32_t>();
    cfg.caps = need(j, "caps").get<std::vector<int>>();
    if (static_cast<int>(cfg.caps.size()) != vertices)
        throw ParseError("caps length must equal the vertex count");
    cfg.total_dim_cap = j.value("total_dim_cap", dim_total(cfg.caps));
    cfg.cache_path = j.value("cache_path", std::string{});
    cfg.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("guards")) {
        const Json& g = j["guards"];
        cfg.guards.max_state_space = g.value("max_state_space", cfg.guards.max_state_space);
        cfg.guards.max_hom_enum = g.value("max_hom_enum", cfg.guards.max_hom_enum);
        cfg.guards.max_rewrite_steps = g.value("max_rewrite_steps", cfg.guards.max_rewrite_steps);
    }
    return cfg;
}

Config load_config_file(const std::string& path) {
    return config_from_json(parse_file(path));
}

Json int_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected an integer or a decimal string");
}

Json matrix_json(const ffla::FqMatrix& m) {
    return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", m.a}};
}

ffla::FqMatrix matrix_from_json(const Json& j) {
    ffla::FqMatrix m(need(j, "rows").get<std::uint32_t>(), need(j, "cols").get<std::uint32_t>());
    auto entries = need(j, "entries").get<std::vector<std::uint32_t>>();
    if (entries.size() != m.a.size()) throw ParseError("matrix entry count mismatch");
    m.a = std::move(entries);
    return m;
}

Json rep_json(const quiverrep::Representation& r) {
    Json arrows = Json::array();
    for (const auto& m : r.arrow_maps) arrows.push_back(matrix_json(m));
    return Json{{"dim_vector", r.dims}, {"arrow_maps", arrows}};
}

quiverrep::Representation rep_from_json(const Json& j) {
    quiverrep::Representation r;
    r.dims = need(j, "dim_vector").get<DimVector>();
    for (const auto& m : need(j, "arrow_maps")) r.arrow_maps.push_back(matrix_from_json(m));
    return r;
}

// ---- cache ----

namespace {

Json key_json(const quiverrep::Cat& cat, const std::vector<int>& caps, int total_cap) {
    Json arrows = Json::array();
    for (auto [s, t] : cat.quiver.arrows) arrows.push_back(Json::array({s + 1, t + 1}));
    return Json{{"quiver", Json{{"vertices", cat.quiver.vertices}, {"arrows", arrows}}},
                {"q", cat.q()},
                {"caps", caps},
                {"total_dim_cap", total_cap}};
}

} // namespace

Json table_json(const quiverrep::IsoClassTable& table) {
    Json classes = Json::array();
    for (quiverrep::ClassId id = 0; id < table.classes.size(); ++id) {
        const auto& ci = table.classes[id];
        classes.push_back(Json{{"id", id},
                               {"dim_vector", ci.dims},
                               {"end_dim", ci.end_dim},
                               {"aut_order", int_json(ci.aut)},
                               {"orbit_size", int_json(ci.orbit)},
                               {"aliases", ci.aliases},
                               {"rep", rep_json(ci.rep)}});
    }
    Json blocks = Json::array();
    for (const auto& [dims, block] : table.blocks)
        blocks.push_back(Json{{"dim_vector", dims}, {"class_of_state", block.class_of_state}});
    return Json{{"format_version", kCacheFormatVersion},
                {"key", key_json(table.cat, table.caps, table.total_cap)},
                {"classes", classes},
                {"blocks", blocks}};
}

void store_table(const quiverrep::IsoClassTable& table, const std::string& path) {
    atomic_write(path, table_json(table).dump(1));
}

std::optional<quiverrep::IsoClassTable> load_table(const quiverrep::Cat& cat,
                                                   const std::vector<int>& caps, int total_cap,
                                                   const Guards& guards, const std::string& path,
                                                   std::string* warning) {
    namespace fs = std::filesystem;
    if (path.empty() || !fs::exists(path)) return std::nullopt;
    Json j;
    try {
        j = parse_file(path);
        int ver = need(j, "format_version").get<int>();
        if (ver > kCacheFormatVersion)
            throw ParseError("cache " + path + " uses format version " + std::to_string(ver) +
                             ", newer than supported " + std::to_string(kCacheFormatVersion));
        if (ver < kCacheFormatVersion) {
            if (warning) *warning = "cache format version outdated; rebuilding";
            return std::nullopt;
        }
        if (need(j, "key") != key_json(cat, caps, total_cap)) {
            if (warning) *warning = "cache key mismatch (quiver/q/caps changed); rebuilding";
            return std::nullopt;
        }
        quiverrep::IsoClassTable table{cat, caps, total_cap, guards, {}, {}, {}, {}, false};
        for (const auto& cj : need(j, "classes")) {
            quiverrep::ClassInfo ci;
            ci.rep = rep_from_json(need(cj, "rep"));
            ci.dims = need(cj, "dim_vector").get<DimVector>();
            ci.aut = int_from_json(need(cj, "aut_order"));
            ci.orbit = int_from_json(need(cj, "orbit_size"));
            quiverrep::validate_rep(cat, ci.rep);
            if (ci.rep.dims != ci.dims) throw ParseError("class dims inconsistent");
            table.classes.push_back(std::move(ci));
        }
        for (const auto& bj : need(j, "blocks")) {
            quiverrep::DimBlock block;
            block.class_of_state = need(bj, "class_of_state").get<std::vector<std::uint32_t>>();
            block.states = block.class_of_state.size();
            for (std::uint32_t id : block.class_of_state)
                if (id >= table.classes.size()) throw ParseError("block references a bad class id");
            table.blocks[need(bj, "dim_vector").get<DimVector>()] = std::move(block);
        }
        // spot-check: every representative classifies to its own id
        for (quiverrep::ClassId id = 0; id < table.classes.size(); ++id)
            if (quiverrep::canonical_id(table, table.classes[id].rep) != id)
                throw ParseError("cache classification is inconsistent");
        quiverrep::rebuild_indexes(table);
        return table;
    } catch (const ParseError&) {
        throw; // version errors propagate
    } catch (const std::exception& e) {
        if (warning) *warning = std::string("cache unreadable (") + e.what() + "); rebuilding";
        return std::nullopt;
    }
}

// ---- words and elements ----

Json word_json(const mhall::NormalWord& w) {
    Json torus = Json::array();
    for (auto it = w.torus.rbegin(); it != w.torus.rend(); ++it)
        torus.push_back(Json{{"degree", it->first}, {"exponents", it->second}});
    Json stalks = Json::array();
    for (auto it = w.stalks.rbegin(); it != w.stalks.rend(); ++it)
        stalks.push_back(Json{{"degree", it->first}, {"class", it->second}});
    return Json{{"torus", torus}, {"stalks", stalks}};
}

mhall::NormalWord word_from_json(const Json& j, int vertices) {
    mhall::NormalWord w;
    if (j.contains("torus"))
        for (const auto& t : j["torus"]) {
            DimVector alpha = need(t, "exponents").get<DimVector>();
            if (static_cast<int>(alpha.size()) != vertices)
                throw ParseError("torus exponent length mismatch");
            if (dim_is_zero(alpha)) continue;
            if (!w.torus.emplace(need(t, "degree").get<int>(), std::move(alpha)).second)
                throw ParseError("duplicate torus degree");
        }
    if (j.contains("stalks"))
        for (const auto& s : j["stalks"]) {
            quiverrep::ClassId cls = need(s, "class").get<quiverrep::ClassId>();
            if (cls == 0) continue;
            if (!w.stalks.emplace(need(s, "degree").get<int>(), cls).second)
                throw ParseError("duplicate stalk degree");
        }
    return w;
}

Json torus_json(const mhall::TorusElement& t) {
    mhall::NormalWord w;
    w.torus = t.exps;
    Json j = word_json(w);
    return Json{{"torus", j["torus"]}};
}

mhall::TorusElement torus_from_json(const Json& j, int vertices) {
    mhall::NormalWord w = word_from_json(j, vertices);
    if (!w.stalks.empty()) throw ParseError("torus element with stalk factors");
    mhall::TorusElement t;
    t.exps = w.torus;
    return t;
}

Json element_json(const mhall::Element& e) {
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms)
        terms.push_back(Json{{"coeff", rat_str(c)}, {"word", word_json(w)}});
    return Json{{"terms", terms}};
}

mhall::Element element_from_json(const Json& j, int vertices) {
    mhall::Element e;
    for (const auto& t : need(j, "terms")) {
        Rat c = parse_rat(need(t, "coeff").get<std::string>());
        e = mhall::add(e, mhall::single(word_from_json(need(t, "word"), vertices), c));
    }
    return e;
}

Json derived_word_json(const dhall::DerivedWord& w) {
    Json stalks = Json::array();
    for (auto it = w.stalks.rbegin(); it != w.stalks.rend(); ++it)
        stalks.push_back(Json{{"degree", it->first}, {"class", it->second}});
    return Json{{"stalks", stalks}};
}

dhall::DerivedWord derived_word_from_json(const Json& j) {
    dhall::DerivedWord w;
    if (j.contains("stalks"))
        for (const auto& s : j["stalks"]) {
            quiverrep::ClassId cls = need(s, "class").get<quiverrep::ClassId>();
            if (cls == 0) continue;
            if (!w.stalks.emplace(need(s, "degree").get<int>(), cls).second)
                throw ParseError("duplicate stalk degree");
        }
    return w;
}

Json dh_element_json(const dhall::DHElement& e) {
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms)
        terms.push_back(Json{{"coeff", rat_str(c)}, {"word", derived_word_json(w)}});
    return Json{{"terms", terms}};
}

dhall::DHElement dh_element_from_json(const Json& j) {
    dhall::DHElement e;
    for (const auto& t : need(j, "terms")) {
        Rat c = parse_rat(need(t, "coeff").get<std::string>());
        e = dhall::dh_add(e, dhall::dh_single(derived_word_from_json(need(t, "word")), c));
    }
    return e;
}

// ---- complexes ----

Json complex_json(const complexes::BoundedComplex& X) {
    Json degrees = Json::array();
    for (const auto& [d, comp] : X.components) {
        Json arrows = Json::array();
        for (const auto& m : comp.arrow_maps) arrows.push_back(matrix_json(m));
        degrees.push_back(Json{{"degree", d}, {"dim_vector", comp.dims}, {"arrow_maps", arrows}});
    }
    Json diffs = Json::array();
    for (const auto& [d, f] : X.differentials) {
        Json maps = Json::array();
        for (const auto& m : f) maps.push_back(matrix_json(m));
        diffs.push_back(Json{{"from_degree", d}, {"vertex_maps", maps}});
    }
    return Json{{"degrees", degrees}, {"differentials", diffs}};
}

complexes::BoundedComplex complex_from_json(const quiverrep::Cat& cat, const Json& j) {
    complexes::BoundedComplex X;
    for (const auto& dj : need(j, "degrees")) {
        quiverrep::Representation r;
        r.dims = need(dj, "dim_vector").get<DimVector>();
        for (const auto& m : need(dj, "arrow_maps")) r.arrow_maps.push_back(matrix_from_json(m));
        int deg = need(dj, "degree").get<int>();
        if (!X.components.emplace(deg, std::move(r)).second)
            throw ParseError("duplicate complex degree");
    }
    if (j.contains("differentials"))
        for (const auto& fj : j["differentials"]) {
            quiverrep::Morphism f;
            for (const auto& m : need(fj, "vertex_maps")) f.push_back(matrix_from_json(m));
            if (static_cast<int>(f.size()) != cat.n())
                throw ParseError("differential vertex map count mismatch");
            int deg = need(fj, "from_degree").get<int>();
            if (!X.differentials.emplace(deg, std::move(f)).second)
                throw ParseError("duplicate differential degree");
        }
    return X;
}

Json reduced_json(const complexes::ReducedForm& rf) {
    return Json{{"coeff", rat_str(rf.coeff)}, {"word", word_json(rf.word)}};
}

Json report_json(const verify::CheckReport& rep, bool include_timing) {
    Json failures = Json::array();
    for (const auto& f : rep.failures)
        failures.push_back(Json{{"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    Json j{{"check", rep.check},
           {"params", rep.params},
           {"instances", rep.instances},
           {"failures", failures},
           {"pass", rep.pass()}};
    if (include_timing) j["wall_ms"] = rep.wall_ms;
    return j;
}

void atomic_write(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ParseError("cannot write " + tmp.string());
        out << contents;
    }
    fs::rename(tmp, target);
}

Json parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
}

} // namespace hall::io
