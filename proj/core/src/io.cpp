#include "acp/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace acp {

std::string encode_decimal(const BigReal& x) {
    return x.to_string() + "@" + std::to_string(x.digits());
}

BigReal decode_decimal(const std::string& s) {
    auto at = s.rfind('@');
    if (at == std::string::npos) throw Error("DomainError", "decimal value lacks a precision tag: " + s);
    int digits = std::stoi(s.substr(at + 1));
    return BigReal::from_string(s.substr(0, at), Precision(digits));
}

Json to_json(const Triangulation& t) {
    Json j;
    j["genus"] = t.genus;
    j["vertex_count"] = t.vertex_count;
    Json faces = Json::array();
    for (auto& f : t.faces) faces.push_back({f[0], f[1], f[2]});
    j["faces"] = std::move(faces);
    return j;
}

Triangulation triangulation_from_json(const Json& j) {
    Triangulation t;
    t.genus = j.at("genus").get<int>();
    t.vertex_count = j.at("vertex_count").get<int>();
    for (auto& f : j.at("faces")) {
        if (f.size() != 3) throw Error("DomainError", "face is not a triple");
        t.faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    return t;
}

TriangulationFile triangulation_file_from_json(const Json& j) {
    TriangulationFile out;
    out.triangulation = triangulation_from_json(j);
    if (j.contains("marked_face")) {
        auto& m = j.at("marked_face");
        out.marked_face = std::array<int, 3>{m[0].get<int>(), m[1].get<int>(), m[2].get<int>()};
    }
    if (j.contains("marked_vertex")) out.marked_vertex = j.at("marked_vertex").get<int>();
    if (j.contains("marked_neighbor")) out.marked_neighbor = j.at("marked_neighbor").get<int>();
    return out;
}

GraphFile graph_file_from_json(const Json& j) {
    GraphFile out;
    int n = j.at("vertex_count").get<int>();
    std::vector<VertexPair> edges;
    for (auto& e : j.at("edges")) edges.push_back({e[0].get<int>(), e[1].get<int>()});
    out.graph = SimpleGraph::create(n, std::move(edges));
    for (auto& row : j.at("rotation")) {
        out.rotation.neighbors.push_back({});
        for (auto& v : row) out.rotation.neighbors.back().push_back(v.get<int>());
    }
    return out;
}

namespace {

Json residuals_to_json(const ResidualReport& r) {
    Json j;
    j["max_angle_sum"] = encode_decimal(r.max_angle_sum);
    j["max_tangency"] = encode_decimal(r.max_tangency);
    j["iterations"] = r.iterations;
    return j;
}

ResidualReport residuals_from_json(const Json& j) {
    ResidualReport r;
    r.max_angle_sum = decode_decimal(j.at("max_angle_sum").get<std::string>());
    r.max_tangency = decode_decimal(j.at("max_tangency").get<std::string>());
    r.iterations = j.at("iterations").get<long>();
    return r;
}

Json word_to_json(const GenWord& w) {
    Json j = Json::array();
    for (int s : w) j.push_back(s);
    return j;
}

GenWord word_from_json(const Json& j) {
    GenWord w;
    for (auto& s : j) w.push_back(s.get<int>());
    return w;
}

}  // namespace

Json to_json(const EuclideanPacking& p) {
    Json j;
    j["geometry"] = "euclidean";
    j["precision"] = p.precision_digits;
    j["triangulation"] = to_json(p.triangulation);
    j["marked_face"] = {p.marked_face[0], p.marked_face[1], p.marked_face[2]};
    Json verts = Json::array();
    for (int i = 0; i < p.triangulation.vertex_count; ++i) {
        Json v;
        v["x"] = encode_decimal(p.centers[i].re);
        v["y"] = encode_decimal(p.centers[i].im);
        v["r"] = encode_decimal(p.radii[i]);
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    j["residuals"] = residuals_to_json(p.residuals);
    return j;
}

EuclideanPacking euclidean_packing_from_json(const Json& j) {
    if (packing_geometry(j) != "euclidean") throw Error("DomainError", "not a euclidean packing file");
    EuclideanPacking p;
    p.precision_digits = j.at("precision").get<int>();
    p.triangulation = triangulation_from_json(j.at("triangulation"));
    auto& m = j.at("marked_face");
    p.marked_face = {m[0].get<int>(), m[1].get<int>(), m[2].get<int>()};
    for (auto& v : j.at("vertices")) {
        p.centers.push_back({decode_decimal(v.at("x").get<std::string>()),
                             decode_decimal(v.at("y").get<std::string>())});
        p.radii.push_back(decode_decimal(v.at("r").get<std::string>()));
    }
    p.residuals = residuals_from_json(j.at("residuals"));
    return p;
}

Json to_json(const TorusPacking& p) {
    Json j;
    j["geometry"] = "euclidean-torus";
    j["precision"] = p.precision_digits;
    j["triangulation"] = to_json(p.triangulation);
    j["marked_vertex"] = p.marked_vertex;
    j["marked_neighbor"] = p.marked_neighbor;
    j["tau"] = {{"a", encode_decimal(p.tau.re)}, {"b", encode_decimal(p.tau.im)}};
    j["reduction_word"] = p.reduction_word;
    j["lattice"] = {"1", "tau"};
    Json verts = Json::array();
    for (int i = 0; i < p.triangulation.vertex_count; ++i) {
        Json v;
        v["x"] = encode_decimal(p.centers[i].re);
        v["y"] = encode_decimal(p.centers[i].im);
        v["r"] = encode_decimal(p.radii[i]);
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    Json cls = Json::array();
    for (auto& st : p.vertex_classes) cls.push_back({st[0], st[1]});
    j["translation_classes"] = std::move(cls);
    Json offs = Json::array();
    for (auto& e : p.edge_offsets) offs.push_back({e[0], e[1], e[2], e[3]});
    j["edge_offsets"] = std::move(offs);
    j["residuals"] = residuals_to_json(p.residuals);
    return j;
}

TorusPacking torus_packing_from_json(const Json& j) {
    if (packing_geometry(j) != "euclidean-torus") throw Error("DomainError", "not a torus packing file");
    TorusPacking p;
    p.precision_digits = j.at("precision").get<int>();
    p.triangulation = triangulation_from_json(j.at("triangulation"));
    p.marked_vertex = j.at("marked_vertex").get<int>();
    p.marked_neighbor = j.at("marked_neighbor").get<int>();
    p.tau = {decode_decimal(j.at("tau").at("a").get<std::string>()),
             decode_decimal(j.at("tau").at("b").get<std::string>())};
    for (auto& w : j.at("reduction_word")) p.reduction_word.push_back(w.get<std::string>());
    for (auto& v : j.at("vertices")) {
        p.centers.push_back({decode_decimal(v.at("x").get<std::string>()),
                             decode_decimal(v.at("y").get<std::string>())});
        p.radii.push_back(decode_decimal(v.at("r").get<std::string>()));
    }
    for (auto& c : j.at("translation_classes")) p.vertex_classes.push_back({c[0].get<int>(), c[1].get<int>()});
    for (auto& e : j.at("edge_offsets"))
        p.edge_offsets.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
    p.residuals = residuals_from_json(j.at("residuals"));
    return p;
}

namespace {

Json isometry_to_json(const DiskIsometry& m) {
    Json j;
    j["a_re"] = encode_decimal(m.a.re);
    j["a_im"] = encode_decimal(m.a.im);
    j["b_re"] = encode_decimal(m.b.re);
    j["b_im"] = encode_decimal(m.b.im);
    return j;
}

DiskIsometry isometry_from_json(const Json& j) {
    return {{decode_decimal(j.at("a_re").get<std::string>()), decode_decimal(j.at("a_im").get<std::string>())},
            {decode_decimal(j.at("b_re").get<std::string>()), decode_decimal(j.at("b_im").get<std::string>())}};
}

}  // namespace

Json to_json(const HyperbolicPacking& p) {
    Json j;
    j["geometry"] = "hyperbolic-disk";
    j["precision"] = p.precision_digits;
    j["triangulation"] = to_json(p.triangulation);
    j["marked_vertex"] = p.marked_vertex;
    j["marked_neighbor"] = p.marked_neighbor;
    Json verts = Json::array();
    for (int i = 0; i < p.triangulation.vertex_count; ++i) {
        Json v;
        v["x"] = encode_decimal(p.centers[i].re);
        v["y"] = encode_decimal(p.centers[i].im);
        v["r"] = encode_decimal(p.radii[i]);
        v["R"] = encode_decimal(p.exp_radii[i]);
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    Json gens = Json::array();
    for (auto& g : p.generators) gens.push_back(isometry_to_json(g));
    j["generators"] = std::move(gens);
    Json pairings = Json::array();
    for (auto& s : p.pairings) {
        Json e;
        e["edge"] = {s.edge.first, s.edge.second};
        e["word"] = word_to_json(s.word);
        e["value"] = isometry_to_json(s.value);
        pairings.push_back(std::move(e));
    }
    j["pairings"] = std::move(pairings);
    auto routes = [&](const std::vector<std::pair<VertexPair, GenWord>>& src) {
        Json arr = Json::array();
        for (auto& [e, w] : src) {
            Json r;
            r["edge"] = {e.first, e.second};
            r["word"] = word_to_json(w);
            arr.push_back(std::move(r));
        }
        return arr;
    };
    j["edge_words"] = routes(p.edge_words);
    j["extra_edge_words"] = routes(p.extra_edge_words);
    j["relator"] = word_to_json(p.relator);
    j["residuals"] = residuals_to_json(p.residuals);
    return j;
}

HyperbolicPacking hyperbolic_packing_from_json(const Json& j) {
    if (packing_geometry(j) != "hyperbolic-disk") throw Error("DomainError", "not a hyperbolic packing file");
    HyperbolicPacking p;
    p.precision_digits = j.at("precision").get<int>();
    p.triangulation = triangulation_from_json(j.at("triangulation"));
    p.marked_vertex = j.at("marked_vertex").get<int>();
    p.marked_neighbor = j.at("marked_neighbor").get<int>();
    for (auto& v : j.at("vertices")) {
        p.centers.push_back({decode_decimal(v.at("x").get<std::string>()),
                             decode_decimal(v.at("y").get<std::string>())});
        p.radii.push_back(decode_decimal(v.at("r").get<std::string>()));
        p.exp_radii.push_back(decode_decimal(v.at("R").get<std::string>()));
    }
    for (auto& g : j.at("generators")) p.generators.push_back(isometry_from_json(g));
    for (auto& s : j.at("pairings")) {
        SeamPairing sp;
        sp.edge = {s.at("edge")[0].get<int>(), s.at("edge")[1].get<int>()};
        sp.word = word_from_json(s.at("word"));
        sp.value = isometry_from_json(s.at("value"));
        p.pairings.push_back(std::move(sp));
    }
    auto routes = [&](const Json& arr) {
        std::vector<std::pair<VertexPair, GenWord>> out;
        for (auto& r : arr) {
            VertexPair e{r.at("edge")[0].get<int>(), r.at("edge")[1].get<int>()};
            out.push_back({e, word_from_json(r.at("word"))});
        }
        return out;
    };
    p.edge_words = routes(j.at("edge_words"));
    p.extra_edge_words = routes(j.at("extra_edge_words"));
    p.relator = word_from_json(j.at("relator"));
    p.residuals = residuals_from_json(j.at("residuals"));
    return p;
}

std::string packing_geometry(const Json& j) { return j.at("geometry").get<std::string>(); }

Json dual_to_json(const EuclideanPacking& p, const std::map<int, Circle>& dual) {
    Json j;
    j["geometry"] = "euclidean-dual";
    j["precision"] = p.precision_digits;
    Json faces = Json::array();
    for (auto& [fi, c] : dual) {
        Json f;
        auto& face = p.triangulation.faces[static_cast<size_t>(fi)];
        f["face"] = {face[0], face[1], face[2]};
        f["x"] = encode_decimal(c.center.re);
        f["y"] = encode_decimal(c.center.im);
        f["r"] = encode_decimal(c.radius);
        faces.push_back(std::move(f));
    }
    j["faces"] = std::move(faces);
    return j;
}

Json to_json(const std::vector<AlgebraicCertificate>& certs) {
    Json arr = Json::array();
    for (auto& c : certs) {
        Json j;
        j["quantity"] = c.quantity;
        j["value"] = encode_decimal(c.value);
        Json poly = Json::array();
        for (auto& coef : c.poly) {
            if (coef >= std::numeric_limits<long>::min() && coef <= std::numeric_limits<long>::max())
                poly.push_back(static_cast<long>(coef));
            else
                poly.push_back(coef.str());
        }
        j["poly"] = std::move(poly);
        j["degree_bound"] = c.degree_bound;
        j["height_bound"] = c.height_bound.str();
        j["root_residual"] = encode_decimal(c.root_residual);
        j["verified"] = c.verified;
        arr.push_back(std::move(j));
    }
    Json out;
    out["certificates"] = std::move(arr);
    return out;
}

Json to_json(const PolySystem& sys) {
    Json j;
    j["vars"] = sys.vars;
    j["primary"] = sys.primary_count;
    auto poly_json = [&](const Poly& poly) {
        Json terms = Json::array();
        for (auto& m : poly.terms()) {
            Json t;
            t["coef"] = m.coef.str();
            std::vector<uint32_t> dense(sys.vars.size(), 0);
            for (auto& [v, e] : m.exps) dense[v] = e;
            t["exps"] = dense;
            terms.push_back(std::move(t));
        }
        return terms;
    };
    Json eqs = Json::array();
    for (auto& q : sys.equalities) eqs.push_back(poly_json(q));
    j["equalities"] = std::move(eqs);
    Json ineqs = Json::array();
    for (auto& q : sys.inequalities) ineqs.push_back(poly_json(q));
    j["inequalities"] = std::move(ineqs);
    j["slice"] = sys.square_slice;
    return j;
}

PolySystem polysystem_from_json(const Json& j) {
    PolySystem sys;
    for (auto& v : j.at("vars")) sys.vars.push_back(v.get<std::string>());
    sys.primary_count = j.at("primary").get<size_t>();
    auto poly_from = [&](const Json& terms) {
        std::vector<Monomial> ms;
        for (auto& t : terms) {
            Monomial m;
            m.coef = Int(t.at("coef").get<std::string>());
            auto& dense = t.at("exps");
            for (uint32_t v = 0; v < dense.size(); ++v) {
                uint32_t e = dense[v].get<uint32_t>();
                if (e > 0) m.exps.push_back({v, e});
            }
            ms.push_back(std::move(m));
        }
        return Poly::from_terms(std::move(ms));
    };
    for (auto& q : j.at("equalities")) sys.equalities.push_back(poly_from(q));
    for (auto& q : j.at("inequalities")) sys.inequalities.push_back(poly_from(q));
    for (auto& s : j.at("slice")) sys.square_slice.push_back(s.get<size_t>());
    return sys;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("IoError", "cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) throw Error("IoError", "short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("IoError", "cannot rename into place: " + path);
    }
}

}  // namespace acp
