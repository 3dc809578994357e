#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torusmaps/covers.hpp"
#include "torusmaps/flag_graph.hpp"
#include "torusmaps/json_io.hpp"
#include "torusmaps/render.hpp"

namespace py = pybind11;
using namespace torusmaps;

namespace {

// matrices cross the boundary as [[a, b], [c, d]] row lists
using PyMat = std::vector<std::vector<Int>>;

Mat2 to_mat(const PyMat& rows) {
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw std::invalid_argument("matrix must be [[a,b],[c,d]]");
    return Mat2::from_rows(rows[0][0], rows[0][1], rows[1][0], rows[1][1]);
}

PyMat from_mat(const Mat2& M) { return {{M.m[0], M.m[1]}, {M.m[2], M.m[3]}}; }

TilingId to_type(const std::string& name) {
    auto id = tiling_from_name(name);
    if (!id) throw std::invalid_argument("unknown tiling type '" + name + "'");
    return *id;
}

ToroidalMap to_map(const std::string& type, const PyMat& rows) {
    Mat2 M = to_mat(rows);
    if (M.det() == 0) throw std::invalid_argument("matrix is singular");
    return ToroidalMap(to_type(type), M);
}

py::dict cover_dict(const CoverDescriptor& c, int orbits, int iso_class) {
    py::dict d;
    d["S"] = from_mat(c.S);
    d["sheets"] = c.sheets;
    d["cover_hnf"] = from_mat(c.cover().K);
    d["orbits"] = orbits;
    if (iso_class >= 0) d["iso_class"] = iso_class;
    return d;
}

void register_tilings(py::module_& m) {
    m.def(
        "tiling_types",
        [] {
            std::vector<std::string> out;
            for (TilingId id : all_tilings()) out.push_back(tiling_name(id));
            return out;
        },
        "names of the eleven vertex-transitive plane tilings");
    m.def(
        "tiling_geometry",
        [](const std::string& type) { return tiling_to_json(tiling(to_type(type))).dump(); },
        py::arg("type"), "exact cell geometry as a JSON string, rationals spelled \"p/q\"");
    m.def(
        "render_svg", [](const std::string& type, int cells) { return render_svg(to_type(type), cells); },
        py::arg("type"), py::arg("cells") = 3,
        "SVG of a cells x cells block, faces cut into flag triangles colored by orbit class");
}

void register_torus(py::module_& m) {
    m.def(
        "hnf", [](const PyMat& rows) { return from_mat(hnf(to_mat(rows))); }, py::arg("matrix"),
        "column-style Hermite form [[a,0],[b,d]] of the lattice the columns generate");
    m.def(
        "classify",
        [](const std::string& type, const PyMat& matrix) {
            ToroidalMap X = to_map(type, matrix);
            MapCounts c = counts(X);
            OrbitReport r = flag_orbits(X);
            py::dict d;
            d["type"] = std::string(tiling_name(X.type));
            d["hnf"] = from_mat(X.K);
            d["sheets"] = X.sheets();
            d["V"] = c.vertices;
            d["E"] = c.edges;
            d["F"] = c.faces;
            d["flags"] = c.flags;
            d["orbit_count"] = r.orbit_count;
            d["point_group_order"] = static_cast<Int>(r.surviving.size());
            return d;
        },
        py::arg("type"), py::arg("matrix"),
        "counts, flag-orbit count, and surviving symmetry order of one quotient map");
    m.def(
        "is_isomorphic",
        [](const std::string& type, const PyMat& a, const PyMat& b) {
            return is_isomorphic(to_map(type, a), to_map(type, b));
        },
        py::arg("type"), py::arg("a"), py::arg("b"),
        "do the two lattices give the same map up to symmetry of the tiling");
}

void register_covers(py::module_& m) {
    m.def(
        "covers",
        [](const std::string& type, const PyMat& matrix, Int n, bool classify_iso) {
            ToroidalMap X = to_map(type, matrix);
            auto cs = enumerate_covers(X, n);
            std::vector<int> iso(cs.size(), -1);
            if (classify_iso) {
                auto classes = classify_covers_up_to_iso(cs);
                for (size_t k = 0; k < classes.size(); ++k)
                    for (int i : classes[k]) iso[i] = static_cast<int>(k);
            }
            py::list out;
            for (size_t i = 0; i < cs.size(); ++i)
                out.append(cover_dict(cs[i], flag_orbits(cs[i].cover()).orbit_count, iso[i]));
            return out;
        },
        py::arg("type"), py::arg("matrix"), py::arg("n"), py::arg("classify_iso") = false,
        "the sigma(n) covers with n sheets, optionally grouped into isomorphism classes");
    m.def(
        "cyclic_cover",
        [](const std::string& type, const PyMat& matrix, Int n) {
            CoverDescriptor c = cyclic_cover(to_map(type, matrix), n);
            return cover_dict(c, flag_orbits(c.cover()).orbit_count, -1);
        },
        py::arg("type"), py::arg("matrix"), py::arg("n"));
    m.def(
        "minimal_cover",
        [](const std::string& type, const PyMat& matrix, int k,
           std::optional<Int> bound) -> py::object {
            auto found = minimal_cover_with_orbits(to_map(type, matrix), k, bound);
            if (!found) return py::none();
            return cover_dict(*found, k, -1);
        },
        py::arg("type"), py::arg("matrix"), py::arg("k"), py::arg("bound") = std::nullopt,
        "smallest cover whose flag-orbit count is exactly k, or None within the bound");
}

void register_oracle(py::module_& m) {
    m.def(
        "oracle_orbit_count",
        [](const std::string& type, const PyMat& matrix) {
            return orbit_count_oracle(quotient_flag_graph(to_map(type, matrix)));
        },
        py::arg("type"), py::arg("matrix"),
        "flag-orbit count recomputed from the raw flag permutations, no symmetry theory");
    m.def(
        "automorphism_count",
        [](const std::string& type, const PyMat& matrix) {
            return static_cast<Int>(
                automorphism_group(quotient_flag_graph(to_map(type, matrix))).size());
        },
        py::arg("type"), py::arg("matrix"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact toroidal quotients of the eleven vertex-transitive plane tilings";
    register_tilings(m);
    register_torus(m);
    register_covers(m);
    register_oracle(m);
}
