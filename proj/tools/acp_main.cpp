#include <chrono>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "acp/io.hpp"
#include "acp/newton.hpp"
#include "acp/packer_euclidean.hpp"
#include "acp/packer_hyperbolic.hpp"
#include "acp/packer_torus.hpp"
#include "acp/svg.hpp"

namespace {

using namespace acp;

struct RunConfig {
    int precision = 64;
    std::string tol_str;
    long max_iters = 500000;
    int degree_bound = 24;
    std::string height_bound = "10000000000";
    int target_digits = 0;  // 0 -> precision - 8

    Precision prec() const {
        if (precision < 32) throw Error("DomainError", "precision must be at least 32 digits");
        return Precision(precision);
    }
    BigReal tol() const {
        Precision p = prec();
        BigReal t = tol_str.empty() ? pow10(-(precision / 2), p) : BigReal::from_string(tol_str, p);
        if (t < pow10(-(precision - 8), p))
            throw Error("DomainError", "tolerance below 10^(8-precision) is not representable reliably");
        return t;
    }
};

struct Report {
    Json j;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Report(const std::string& command) {
        j["command"] = command;
        j["timings_ms"] = Json::object();
        j["outputs"] = Json::array();
    }
    void lap(const std::string& stage) {
        auto now = std::chrono::steady_clock::now();
        j["timings_ms"][stage] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now - t0).count();
        t0 = now;
    }
    void output(const std::string& path) { j["outputs"].push_back(path); }
    void write(const std::string& out_path) {
        j["status"] = "ok";
        write_text_file_atomic(out_path + ".report.json", j.dump(2) + "\n");
    }
};

Json load_json(const std::string& path) { return Json::parse(read_text_file(path)); }

std::array<int, 3> parse_face(const std::string& s) {
    std::array<int, 3> f{};
    if (std::sscanf(s.c_str(), "%d,%d,%d", &f[0], &f[1], &f[2]) != 3)
        throw Error("DomainError", "expected --marked-face a,b,c");
    return f;
}

// residual refresh after refinement
void refresh_residuals(EuclideanPacking& p) {
    Precision prec(p.precision_digits);
    BigReal two_pi = BigReal(2, prec) * pi(prec);
    BigReal worst_angle(prec), worst_tan(prec);
    for (int v = 0; v < p.triangulation.vertex_count; ++v) {
        if (v == p.marked_face[0] || v == p.marked_face[1] || v == p.marked_face[2]) continue;
        worst_angle =
            max(worst_angle, abs(angle_sum(p.triangulation, v, p.radii, Geometry::Euclidean, prec) - two_pi));
    }
    for (auto& e : p.triangulation.edge_list()) {
        BigReal d = abs(p.centers[e.first] - p.centers[e.second]);
        worst_tan = max(worst_tan, abs(d - (p.radii[e.first] + p.radii[e.second])));
    }
    p.residuals.max_angle_sum = worst_angle;
    p.residuals.max_tangency = worst_tan;
}

void refresh_residuals(TorusPacking& p) {
    Precision prec(p.precision_digits);
    BigReal two_pi = BigReal(2, prec) * pi(prec);
    BigReal worst_angle(prec), worst_tan(prec);
    for (int v = 0; v < p.triangulation.vertex_count; ++v)
        worst_angle =
            max(worst_angle, abs(angle_sum(p.triangulation, v, p.radii, Geometry::Euclidean, prec) - two_pi));
    for (auto& [i, j, s, t] : p.edge_offsets) {
        BigComplex lat = BigComplex(BigReal(s, prec), BigReal(prec)) +
                         BigComplex(BigReal(t, prec), BigReal(prec)) * p.tau;
        BigReal d = abs(p.centers[i] - (p.centers[j] + lat));
        worst_tan = max(worst_tan, abs(d - (p.radii[i] + p.radii[j])));
    }
    p.residuals.max_angle_sum = worst_angle;
    p.residuals.max_tangency = worst_tan;
}

DiskIsometry eval_disk_word(const GenWord& w, const std::vector<DiskIsometry>& gens, Precision p) {
    DiskIsometry acc = DiskIsometry::identity(p);
    for (int s : w) {
        const DiskIsometry& g = gens[static_cast<size_t>(std::abs(s)) - 1];
        acc = acc * (s > 0 ? g : g.inverse());
    }
    return acc;
}

void refresh_residuals(HyperbolicPacking& p) {
    Precision prec(p.precision_digits);
    BigReal two_pi = BigReal(2, prec) * pi(prec);
    BigReal worst_angle(prec), worst_tan(prec);
    for (int v = 0; v < p.triangulation.vertex_count; ++v)
        worst_angle =
            max(worst_angle, abs(angle_sum(p.triangulation, v, p.radii, Geometry::Hyperbolic, prec) - two_pi));
    for (auto& [e, w] : p.edge_words) {
        DiskIsometry m = eval_disk_word(w, p.generators, prec);
        BigReal d = hyp_distance(p.centers[e.first], m.apply(p.centers[e.second]));
        worst_tan = max(worst_tan, abs(d - (p.radii[e.first] + p.radii[e.second])));
    }
    p.residuals.max_angle_sum = worst_angle;
    p.residuals.max_tangency = worst_tan;
}

void require_refined(int precision_digits, const ResidualReport& r) {
    Precision p(precision_digits);
    if (r.max_tangency > pow10(-(precision_digits - 8), p))
        throw Error("PackingNotRefined",
                    "packing residual exceeds 10^(8-p); run the refine stage first");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"circle packings of surface triangulations with algebraic certificates"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string in_path, out_path, packing_path, format, marked_face_str, targets_str = "radii";
    int marked_vertex = -1, marked_neighbor = -1;
    bool show_dual = false, show_labels = false;
    std::string svg_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--precision", cfg.precision, "working precision in decimal digits");
        sub->add_option("--tol", cfg.tol_str, "solver tolerance (default 10^(-precision/2))");
        sub->add_option("--max-iters", cfg.max_iters, "iteration budget");
    };

    std::function<void(Report&)> action;

    auto* c_validate = app.add_subcommand("validate", "check triangulation invariants");
    c_validate->add_option("--in", in_path, "triangulation JSON")->required();
    c_validate->add_option("--out", out_path, "report path (optional)");
    c_validate->callback([&]() {
        action = [&](Report& rep) {
            auto tf = triangulation_file_from_json(load_json(in_path));
            auto bad = validate_triangulation(tf.triangulation);
            rep.j["violations"] = bad;
            rep.j["valid"] = bad.empty();
            for (auto& b : bad) std::cout << b << "\n";
            std::cout << (bad.empty() ? "valid" : "invalid") << "\n";
            if (!out_path.empty()) {
                write_text_file_atomic(out_path, rep.j.dump(2) + "\n");
                rep.output(out_path);
            }
        };
    });

    auto* c_complete =
        app.add_subcommand("complete", "complete an embedded planar graph to a sphere triangulation");
    c_complete->add_option("--in", in_path, "graph JSON")->required();
    c_complete->add_option("--out", out_path, "triangulation JSON")->required();
    c_complete->callback([&]() {
        action = [&](Report& rep) {
            auto gf = graph_file_from_json(load_json(in_path));
            auto res = complete_to_triangulation(gf.graph, gf.rotation);
            Json j = to_json(res.triangulation);
            j["vertex_injection"] = res.vertex_injection;
            write_text_file_atomic(out_path, j.dump(2) + "\n");
            rep.output(out_path);
            rep.j["vertex_count"] = res.triangulation.vertex_count;
            rep.j["face_count"] = res.triangulation.faces.size();
        };
    });

    auto* c_pack = app.add_subcommand("pack", "sphere packing with the unit-circle normalization");
    c_pack->add_option("--in", in_path, "triangulation JSON")->required();
    c_pack->add_option("--out", out_path, "packing JSON")->required();
    c_pack->add_option("--marked-face", marked_face_str,
                       "a,b,c (default: file's marked_face or first face)");
    add_common(c_pack);
    c_pack->callback([&]() {
        action = [&](Report& rep) {
            auto tf = triangulation_file_from_json(load_json(in_path));
            std::array<int, 3> mf{};
            if (!marked_face_str.empty())
                mf = parse_face(marked_face_str);
            else if (tf.marked_face)
                mf = *tf.marked_face;
            else if (!tf.triangulation.faces.empty())
                mf = tf.triangulation.faces[0];
            else
                throw Error("InvalidMarkedFace", "no faces to mark");
            auto packing = solve_interstice(tf.triangulation, mf, cfg.tol(), cfg.max_iters);
            rep.lap("solve");
            write_text_file_atomic(out_path, to_json(packing).dump(2) + "\n");
            rep.output(out_path);
            rep.j["residuals"] =
                Json{{"max_angle_sum", encode_decimal(packing.residuals.max_angle_sum)},
                     {"max_tangency", encode_decimal(packing.residuals.max_tangency)},
                     {"iterations", packing.residuals.iterations}};
        };
    });

    auto* c_ptorus = app.add_subcommand("pack-torus", "genus-1 packing with reduced modulus");
    c_ptorus->add_option("--in", in_path, "triangulation JSON")->required();
    c_ptorus->add_option("--out", out_path, "packing JSON")->required();
    c_ptorus->add_option("--marked-vertex", marked_vertex, "lift centered at the origin");
    c_ptorus->add_option("--marked-neighbor", marked_neighbor, "tie-break neighbor");
    add_common(c_ptorus);
    c_ptorus->callback([&]() {
        action = [&](Report& rep) {
            auto tf = triangulation_file_from_json(load_json(in_path));
            int v0 = marked_vertex >= 0 ? marked_vertex : tf.marked_vertex.value_or(0);
            int u0 = marked_neighbor >= 0 ? marked_neighbor : tf.marked_neighbor.value_or(-1);
            auto packing = solve_torus(tf.triangulation, v0, u0, cfg.tol(), cfg.max_iters);
            rep.lap("solve");
            write_text_file_atomic(out_path, to_json(packing).dump(2) + "\n");
            rep.output(out_path);
            rep.j["tau"] =
                Json{{"a", encode_decimal(packing.tau.re)}, {"b", encode_decimal(packing.tau.im)}};
            rep.j["residuals"] =
                Json{{"max_angle_sum", encode_decimal(packing.residuals.max_angle_sum)},
                     {"max_tangency", encode_decimal(packing.residuals.max_tangency)},
                     {"iterations", packing.residuals.iterations}};
        };
    });

    auto* c_phyp = app.add_subcommand("pack-hyp", "genus >= 2 packing in the Poincare disk");
    c_phyp->add_option("--in", in_path, "triangulation JSON")->required();
    c_phyp->add_option("--out", out_path, "packing JSON")->required();
    c_phyp->add_option("--marked-vertex", marked_vertex, "lift centered at the origin");
    c_phyp->add_option("--marked-neighbor", marked_neighbor, "lift on the positive real axis");
    add_common(c_phyp);
    c_phyp->callback([&]() {
        action = [&](Report& rep) {
            auto tf = triangulation_file_from_json(load_json(in_path));
            int v0 = marked_vertex >= 0 ? marked_vertex : tf.marked_vertex.value_or(0);
            int u0 = marked_neighbor >= 0 ? marked_neighbor : tf.marked_neighbor.value_or(-1);
            auto packing = solve_hyperbolic(tf.triangulation, v0, u0, cfg.tol(), cfg.max_iters);
            rep.lap("solve");
            write_text_file_atomic(out_path, to_json(packing).dump(2) + "\n");
            rep.output(out_path);
            rep.j["residuals"] =
                Json{{"max_angle_sum", encode_decimal(packing.residuals.max_angle_sum)},
                     {"max_tangency", encode_decimal(packing.residuals.max_tangency)},
                     {"iterations", packing.residuals.iterations}};
        };
    });

    auto* c_dual = app.add_subcommand("dual", "per-face circumcircles of tangency points");
    c_dual->add_option("--packing", packing_path, "euclidean packing JSON")->required();
    c_dual->add_option("--out", out_path, "dual JSON")->required();
    c_dual->callback([&]() {
        action = [&](Report& rep) {
            auto packing = euclidean_packing_from_json(load_json(packing_path));
            Precision p(packing.precision_digits);
            BigReal tol = pow10(-(packing.precision_digits / 4), p);
            auto dual = dual_packing(packing, tol);
            write_text_file_atomic(out_path, dual_to_json(packing, dual).dump(2) + "\n");
            rep.output(out_path);
            BigReal worst(p);
            for (auto& [fi, c] : dual) {
                auto& f = packing.triangulation.faces[static_cast<size_t>(fi)];
                for (int v : f) {
                    BigReal d2 = norm(c.center - packing.centers[v]);
                    worst =
                        max(worst, abs(d2 - c.radius * c.radius - packing.radii[v] * packing.radii[v]));
                }
            }
            rep.j["max_orthogonality_residual"] = encode_decimal(worst);
        };
    });

    auto* c_esent = app.add_subcommand("encode-sentence", "first-order existential sentence");
    c_esent->add_option("--in", in_path, "graph JSON (sphere case)");
    c_esent->add_option("--packing", packing_path, "torus packing JSON (torus case)");
    c_esent->add_option("--out", out_path, "output path")->required();
    c_esent->add_option("--format", format, "smt2 (default) or prenex");
    c_esent->callback([&]() {
        action = [&](Report& rep) {
            Sentence s;
            if (!packing_path.empty()) {
                auto packing = torus_packing_from_json(load_json(packing_path));
                auto block = build_torus_block(packing);
                auto ts = encode_sentence_torus(packing.triangulation, block);
                s = std::move(ts.sentence);
                rep.j["counts"] = Json{{"r", ts.r_atoms},
                                       {"edges", ts.edge_preds},
                                       {"nonedges", ts.nonedge_preds},
                                       {"identified", ts.u_preds},
                                       {"memberships", ts.k_preds}};
            } else if (!in_path.empty()) {
                auto gf = graph_file_from_json(load_json(in_path));
                s = encode_sentence_sphere(gf.graph);
            } else {
                throw Error("DomainError", "encode-sentence needs --in (graph) or --packing (torus)");
            }
            rep.j["variables"] = s.vars.size();
            rep.j["atoms"] = s.atom_count();
            std::string text = (format == "prenex") ? s.to_prenex_text() : s.to_smt2();
            write_text_file_atomic(out_path, text);
            rep.output(out_path);
        };
    });

    auto* c_evar = app.add_subcommand("encode-variety", "polynomial variety of the packing problem");
    c_evar->add_option("--in", in_path, "triangulation JSON (sphere case)");
    c_evar->add_option("--packing", packing_path, "solved packing JSON (torus / hyperbolic case)");
    c_evar->add_option("--marked-face", marked_face_str, "a,b,c (sphere case)");
    c_evar->add_option("--out", out_path, "output path")->required();
    c_evar->add_option("--format", format, "polysys (default) or json");
    c_evar->callback([&]() {
        action = [&](Report& rep) {
            PolySystem sys;
            if (!packing_path.empty()) {
                Json pj = load_json(packing_path);
                std::string geom = packing_geometry(pj);
                if (geom == "euclidean-torus")
                    sys = encode_variety_torus(torus_packing_from_json(pj));
                else if (geom == "hyperbolic-disk")
                    sys = encode_variety_hyperbolic(hyperbolic_packing_from_json(pj));
                else
                    throw Error("DomainError",
                                "encode-variety --packing expects a torus or hyperbolic packing");
            } else if (!in_path.empty()) {
                auto tf = triangulation_file_from_json(load_json(in_path));
                std::array<int, 3> mf{};
                if (!marked_face_str.empty())
                    mf = parse_face(marked_face_str);
                else if (tf.marked_face)
                    mf = *tf.marked_face;
                else if (!tf.triangulation.faces.empty())
                    mf = tf.triangulation.faces[0];
                else
                    throw Error("UnsupportedFace", "no faces to mark");
                sys = encode_variety_sphere(tf.triangulation, mf);
            } else {
                throw Error("DomainError", "encode-variety needs --in or --packing");
            }
            rep.j["variables"] = sys.vars.size();
            rep.j["primary_variables"] = sys.primary_count;
            rep.j["equalities"] = sys.equalities.size();
            std::string text = (format == "json") ? to_json(sys).dump(2) + "\n" : polysystem_text(sys);
            write_text_file_atomic(out_path, text);
            rep.output(out_path);
        };
    });

    auto* c_refine = app.add_subcommand("refine", "Newton-refine a packing against its variety");
    c_refine->add_option("--packing", packing_path, "packing JSON")->required();
    c_refine->add_option("--out", out_path, "refined packing JSON")->required();
    c_refine->add_option("--target-digits", cfg.target_digits, "residual target (default precision-8)");
    add_common(c_refine);
    c_refine->callback([&]() {
        action = [&](Report& rep) {
            Json pj = load_json(packing_path);
            std::string geom = packing_geometry(pj);
            Json out;
            auto run = [&](auto packing) {
                int target = cfg.target_digits > 0 ? cfg.target_digits : packing.precision_digits - 8;
                PolySystem sys;
                if constexpr (std::is_same_v<decltype(packing), EuclideanPacking>)
                    sys = encode_variety_sphere(packing.triangulation, packing.marked_face);
                else if constexpr (std::is_same_v<decltype(packing), TorusPacking>)
                    sys = encode_variety_torus(packing);
                else
                    sys = encode_variety_hyperbolic(packing);
                auto res = newton_refine(sys, variety_point(sys, packing), target);
                apply_variety_point(res.values, packing);
                refresh_residuals(packing);
                rep.j["newton_steps"] = res.steps;
                rep.j["residual"] = encode_decimal(res.residual);
                out = to_json(packing);
            };
            if (geom == "euclidean")
                run(euclidean_packing_from_json(pj));
            else if (geom == "euclidean-torus")
                run(torus_packing_from_json(pj));
            else if (geom == "hyperbolic-disk")
                run(hyperbolic_packing_from_json(pj));
            else
                throw Error("DomainError", "unknown packing geometry: " + geom);
            rep.lap("refine");
            write_text_file_atomic(out_path, out.dump(2) + "\n");
            rep.output(out_path);
        };
    });

    auto* c_certify = app.add_subcommand("certify", "recover integer minimal polynomials");
    c_certify->add_option("--packing", packing_path, "refined packing JSON")->required();
    c_certify->add_option("--out", out_path, "certificates JSON")->required();
    c_certify->add_option("--targets", targets_str, "comma list: radii,centers,tangencies,tau,exp_radii");
    c_certify->add_option("--degree-bound", cfg.degree_bound, "max polynomial degree (default 24)");
    c_certify->add_option("--height-bound", cfg.height_bound, "max |coefficient| (default 1e10)");
    c_certify->callback([&]() {
        action = [&](Report& rep) {
            Json pj = load_json(packing_path);
            std::string geom = packing_geometry(pj);
            Int height(cfg.height_bound);
            std::vector<std::pair<std::string, BigReal>> quantities;
            std::vector<std::string> targets;
            {
                std::stringstream ss(targets_str);
                std::string item;
                while (std::getline(ss, item, ',')) targets.push_back(item);
            }
            auto gather = [&](const auto& packing) {
                require_refined(packing.precision_digits, packing.residuals);
                for (auto& t : targets) {
                    auto q = certify_quantities(packing, parse_target(t));
                    quantities.insert(quantities.end(), q.begin(), q.end());
                }
            };
            if (geom == "euclidean")
                gather(euclidean_packing_from_json(pj));
            else if (geom == "euclidean-torus")
                gather(torus_packing_from_json(pj));
            else if (geom == "hyperbolic-disk")
                gather(hyperbolic_packing_from_json(pj));
            else
                throw Error("DomainError", "unknown packing geometry: " + geom);
            auto certs = certify_values(quantities, cfg.degree_bound, height);
            rep.lap("certify");
            size_t verified = 0;
            for (auto& c : certs) verified += c.verified ? 1 : 0;
            rep.j["verified"] = verified;
            rep.j["total"] = certs.size();
            write_text_file_atomic(out_path, to_json(certs).dump(2) + "\n");
            rep.output(out_path);
        };
    });

    auto* c_render = app.add_subcommand("render", "SVG drawing of a packing");
    c_render->add_option("--packing", packing_path, "packing JSON")->required();
    c_render->add_option("--svg", svg_path, "output SVG path");
    c_render->add_option("--out", out_path, "output SVG path (alias)");
    c_render->add_flag("--dual", show_dual, "draw dual circles dashed");
    c_render->add_flag("--labels", show_labels, "draw vertex labels");
    c_render->callback([&]() {
        action = [&](Report& rep) {
            std::string target = !svg_path.empty() ? svg_path : out_path;
            if (target.empty()) throw Error("DomainError", "render needs --svg or --out");
            Json pj = load_json(packing_path);
            std::string geom = packing_geometry(pj);
            SvgOptions opt;
            opt.show_dual = show_dual;
            opt.show_labels = show_labels;
            std::string text;
            if (geom == "euclidean") {
                auto packing = euclidean_packing_from_json(pj);
                auto circles = svg_circles(packing);
                if (show_dual) {
                    Precision p(packing.precision_digits);
                    auto dual = dual_packing(packing, pow10(-(packing.precision_digits / 4), p));
                    auto dual_circles = svg_dual_circles(packing, dual);
                    circles.insert(circles.end(), dual_circles.begin(), dual_circles.end());
                }
                text = render_svg(circles, opt, false);
            } else if (geom == "euclidean-torus") {
                auto packing = torus_packing_from_json(pj);
                text = render_svg(svg_circles(packing), opt, false);
            } else if (geom == "hyperbolic-disk") {
                auto packing = hyperbolic_packing_from_json(pj);
                text = render_svg(svg_circles(packing), opt, true);
            } else {
                throw Error("DomainError", "unknown packing geometry: " + geom);
            }
            write_text_file_atomic(target, text);
            rep.output(target);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    Report rep(cmd);
    try {
        action(rep);
        if (!out_path.empty())
            rep.write(out_path);
        else if (!svg_path.empty())
            rep.write(svg_path);
    } catch (const Error& e) {
        Json err{{"error", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err{{"error", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
