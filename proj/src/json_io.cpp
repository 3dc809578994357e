#include "torusmaps/json_io.hpp"

#include <stdexcept>

namespace torusmaps {

using nlohmann::json;

json mat_to_json(const Mat2& M) {
    return json::array({json::array({M.m[0], M.m[1]}), json::array({M.m[2], M.m[3]})});
}

Mat2 mat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
        j[0].size() != 2 || j[1].size() != 2)
        throw std::invalid_argument("matrix must be [[a,b],[c,d]]");
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!j[r][c].is_number_integer())
                throw std::invalid_argument("matrix entries must be integers");
    return Mat2::from_rows(j[0][0].get<Int>(), j[0][1].get<Int>(),
                           j[1][0].get<Int>(), j[1][1].get<Int>());
}

json map_to_json(const ToroidalMap& X) {
    json j;
    j["type"] = tiling_name(X.type);
    j["hnf"] = mat_to_json(X.K);
    return j;
}

ToroidalMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.contains("hnf"))
        throw std::invalid_argument("expected {\"type\": ..., \"hnf\": [[..],[..]]}");
    auto id = tiling_from_name(j["type"].get<std::string>());
    if (!id) throw std::invalid_argument("unknown tiling type " + j["type"].get<std::string>());
    return ToroidalMap(*id, mat_from_json(j["hnf"]));
}

static json vec_to_json(const Vec2& v) {
    return json::array({rat_str(v.x), rat_str(v.y)});
}

json tiling_to_json(const PeriodicTiling& t) {
    json j;
    j["type"] = t.name;
    j["vertex_type"] = t.vertex_type;
    j["counts"] = {{"vertices", (Int)t.vertices.size()},
                   {"edges", (Int)t.edges.size()},
                   {"faces", (Int)t.faces.size()},
                   {"flags", t.num_flags()}};
    json verts = json::array();
    for (const auto& v : t.vertices) verts.push_back(vec_to_json(v));
    j["vertices"] = verts;
    json faces = json::array();
    for (const auto& f : t.faces) {
        json poly = json::array();
        for (const auto& v : f.verts) poly.push_back(vec_to_json(v));
        faces.push_back(poly);
    }
    j["faces"] = faces;
    json edges = json::array();
    for (const auto& e : t.edges)
        edges.push_back(json{{"u", vec_to_json(e.u)}, {"w", vec_to_json(e.w)}});
    j["edges"] = edges;
    j["symmetry_count"] = (Int)t.symmetries.size();
    j["flag_orbit_count"] = t.plane_flag_orbit_count();
    return j;
}

}  // namespace torusmaps
