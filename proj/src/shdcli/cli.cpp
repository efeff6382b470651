#include "sfh/cli.hpp"
#include "sfh/builders.hpp"
#include "sfh/error.hpp"
#include "sfh/polytope.hpp"
#include "sfh/shd.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace sfh {

namespace {

using Json = nlohmann::ordered_json;

Json int_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json ints_json(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_json(x));
    return a;
}

Json rat_json(const Rat& x) {
    if (x.get_den() == 1) return int_json(x.get_num());
    return x.get_str();
}

Json rats_json(const RatVec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(rat_json(x));
    return a;
}

Json coset_json(const CosetVec& c) { return Json{{"free", ints_json(c.free)}, {"torsion", ints_json(c.torsion)}}; }

Json validation_json(const ValidationReport& rep) {
    return Json{{"ok", rep.ok()},
                {"euler_characteristic", rep.euler_characteristic},
                {"genus", rep.genus},
                {"components", rep.components},
                {"boundary_circles", rep.boundary_circles},
                {"problems", rep.problems}};
}

Json diagram_json(const Diagram& d) {
    return Json{{"points", d.points.size()},
                {"alpha_curves", d.alpha.size()},
                {"beta_curves", d.beta.size()},
                {"regions", d.regions.size()},
                {"boundary_circles", d.boundary_circles.size()}};
}

Json admissibility_json(const Diagram& d) {
    Json j;
    j["periodic_lattice_rank"] = periodic_lattice(d).rank();
    try {
        AdmissibilityResult a = is_admissible(d);
        j["admissible"] = a.admissible;
        if (a.witness) j["witness"] = ints_json(*a.witness);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UndecidedBeyondBound) throw;
        j["admissible"] = "undecided";
    }
    return j;
}

Json niceness_json(const Diagram& d) {
    NicenessResult n = is_nice(d);
    Json offending = Json::array();
    for (std::size_t r : n.offending_regions) offending.push_back(d.regions[r].id);
    return Json{{"nice", n.nice}, {"offending_regions", offending}};
}

Json table_json(const Diagram& d, const SFHTable& t) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        const ClassHomology& ch = t.classes[c];
        Json names = Json::array();
        for (std::size_t g : t.partition.members[c]) names.push_back(generator_name(d, t.generators[g]));
        classes.push_back(Json{{"class", c},
                               {"coset", coset_json(ch.coset_rep)},
                               {"generators", names},
                               {"differential_rank", ch.differential_rank},
                               {"dimension", ch.dimension},
                               {"gradings", ints_json(ch.gradings)}});
    }
    return Json{{"b1", t.b1},
                {"torsion", ints_json(t.torsion)},
                {"generators", t.generators.size()},
                {"differential", to_string(t.differential)},
                {"classes", classes},
                {"total_rank", t.total_rank()}};
}

Json polytope_json(const Support& s, const SfhPolytope& p) {
    Json pts = Json::array();
    for (const SupportPoint& pt : s.points)
        pts.push_back(Json{{"class", pt.class_id}, {"lattice", ints_json(pt.lattice)}, {"dimension", pt.dimension}});
    auto vertices = [](const RatPolytope& poly) {
        Json a = Json::array();
        for (const RatVec& v : poly.vertices) a.push_back(rats_json(v));
        return a;
    };
    Json facets = Json::array();
    for (const Halfspace& h : p.raw.facets)
        facets.push_back(Json{{"normal", rats_json(h.normal)}, {"offset", rat_json(h.offset)}});
    Json j{{"support", pts},
           {"anchor_class", s.anchor_class},
           {"b1", p.b1},
           {"dim", p.dim()},
           {"total_rank", p.total_rank},
           {"vertices", vertices(p.raw)},
           {"facets", facets},
           {"centroid", rats_json(p.centroid)},
           {"centered_vertices", vertices(p.centered)}};
    if (p.dim() < p.b1) j["diagnostic"] = "polytope dimension is below b1";
    return j;
}

// Text rendering of the report tree.
void render(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [&](const Json& v) {
        if (!v.is_array()) return false;
        for (const Json& x : v)
            if (x.is_object()) return false;
        return true;
    };
    auto inline_array = [&](const Json& v) {
        std::string s = "[";
        bool first = true;
        for (const Json& x : v) {
            if (!first) s += ", ";
            first = false;
            s += x.is_array() ? x.dump() : scalar(x);
        }
        return s + "]";
    };
    for (const auto& [key, v] : j.items()) {
        if (v.is_object()) {
            out << pad << key << ":\n";
            render(v, out, indent + 1);
        } else if (v.is_array() && !flat(v)) {
            out << pad << key << ":\n";
            for (const Json& item : v) {
                out << pad << "  -\n";
                render(item, out, indent + 2);
            }
        } else if (v.is_array()) {
            out << pad << key << ": " << inline_array(v) << '\n';
        } else {
            out << pad << key << ": " << scalar(v) << '\n';
        }
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    if (!s.empty() && s.back() == ',') parts.push_back("");
    return parts;
}

RatVec parse_class(const std::string& s) {
    RatVec v;
    if (s.empty()) return v;
    for (std::string part : split_commas(s)) {
        part.erase(0, part.find_first_not_of(" \t"));
        part.erase(part.find_last_not_of(" \t") + 1);
        Rat r;
        if (part.empty() || part.find_first_not_of("+-0123456789/") != std::string::npos ||
            r.set_str(part[0] == '+' ? part.substr(1) : part, 10) != 0 || r.get_den() == 0)
            throw Error(ErrorCode::InvalidArgument, "bad class coordinate '" + part + "'");
        r.canonicalize();
        v.push_back(r);
    }
    return v;
}

IntVec integral_class(const RatVec& v) {
    IntVec out;
    for (const Rat& x : v) {
        if (x.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "face queries need an integral class");
        out.push_back(x.get_num());
    }
    return out;
}

int exit_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::UndeclaredIdentifier:
    case ErrorCode::DuplicateIdentifier: return kExitParse;
    case ErrorCode::InvalidDiagram: return kExitInvalid;
    case ErrorCode::DifferentialUndetermined: return kExitUndetermined;
    default: return kExitFailure;
    }
}

struct Session {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
    std::string command;

    Json report() const { return Json{{"schema", 1}, {"command", command}}; }

    void emit(const Json& j) const {
        if (json)
            out << j.dump(2) << '\n';
        else
            render(j, out, 0);
    }

    int fail(const Error& e) const {
        if (json) {
            Json j = report();
            Json ej{{"code", to_string(e.code())}, {"message", e.what()}};
            if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
                ej["line"] = pe->line();
                ej["column"] = pe->column();
            }
            j["error"] = ej;
            out << j.dump(2) << '\n';
        }
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return exit_code(e.code());
    }

    // Parses and validates; on a validation failure reports and returns false.
    std::optional<Diagram> load(const std::string& path, Json& j, int& status) const {
        Diagram d = read_shd_file(path);
        j["file"] = path;
        ValidationReport rep = validate(d);
        j["validation"] = validation_json(rep);
        if (!rep.ok()) {
            emit(j);
            for (const std::string& p : rep.problems) err << "invalid: " << p << '\n';
            status = kExitInvalid;
            return std::nullopt;
        }
        return d;
    }
};

int run_validate(Session& s, const std::string& file) {
    Json j = s.report();
    int status = kExitOk;
    auto d = s.load(file, j, status);
    if (!d) return status;
    j["diagram"] = diagram_json(*d);
    s.emit(j);
    return kExitOk;
}

int run_compute(Session& s, const std::string& file) {
    Json j = s.report();
    int status = kExitOk;
    auto d = s.load(file, j, status);
    if (!d) return status;
    j["diagram"] = diagram_json(*d);
    j["admissibility"] = admissibility_json(*d);
    j["niceness"] = niceness_json(*d);
    j["sfh"] = table_json(*d, homology(*d));
    s.emit(j);
    return kExitOk;
}

struct PolytopeData {
    SFHTable table;
    Support support;
    SfhPolytope polytope;
};

PolytopeData polytope_data(const Diagram& d) {
    PolytopeData p;
    p.table = homology(d);
    p.support = support_points(p.table);
    p.polytope = build_polytope(p.support);
    return p;
}

int run_polytope(Session& s, const std::string& file) {
    Json j = s.report();
    int status = kExitOk;
    auto d = s.load(file, j, status);
    if (!d) return status;
    PolytopeData p = polytope_data(*d);
    j["polytope"] = polytope_json(p.support, p.polytope);
    s.emit(j);
    return kExitOk;
}

int run_face(Session& s, const std::string& file, const std::string& cls) {
    Json j = s.report();
    int status = kExitOk;
    auto d = s.load(file, j, status);
    if (!d) return status;
    PolytopeData p = polytope_data(*d);
    FaceResult f = face_query(p.polytope, p.support, integral_class(parse_class(cls)));
    Json classes = Json::array();
    for (std::size_t i : f.points) classes.push_back(p.support.points[i].class_id);
    j["face"] = Json{{"class", ints_json(f.alpha)},
                     {"c_min", rat_json(f.c_min)},
                     {"spinc_classes", classes},
                     {"dimension", f.dimension}};
    s.emit(j);
    return kExitOk;
}

int run_norm(Session& s, const std::string& file, const std::string& cls) {
    Json j = s.report();
    int status = kExitOk;
    auto d = s.load(file, j, status);
    if (!d) return status;
    PolytopeData p = polytope_data(*d);
    RatVec alpha = parse_class(cls);
    j["norm"] = Json{{"class", rats_json(alpha)},
                     {"y", rat_json(seminorm_y(p.polytope, alpha))},
                     {"z", rat_json(symmetrized_z(p.polytope, alpha))}};
    s.emit(j);
    return kExitOk;
}

int run_depth(Session& s, const std::string& file) {
    Json j = s.report();
    int status = kExitOk;
    auto d = s.load(file, j, status);
    if (!d) return status;
    const std::size_t rank = homology(*d).total_rank();
    j["depth"] = Json{{"total_rank", rank}, {"upper_bound", depth_upper_bound(rank)}};
    s.emit(j);
    return kExitOk;
}

int write_diagram(Session& s, const Diagram& d, const std::string& out_path) {
    if (out_path.empty()) {
        s.out << emit_shd(d);
        return kExitOk;
    }
    write_shd_file(out_path, d);
    Json j = s.report();
    j["output"] = out_path;
    j["diagram"] = diagram_json(d);
    s.emit(j);
    return kExitOk;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sutured Floer homology of sutured Heegaard diagrams", "shd"};
    app.require_subcommand(1);
    app.fallthrough();
    Session s{out, err, false, {}};
    app.add_flag("--json", s.json, "Print the report as JSON");

    std::string file, cls, out_path, f1, c1, f2, c2;
    long p = 0, q = 0, n = 0;

    auto* validate_cmd = app.add_subcommand("validate", "Check a diagram");
    validate_cmd->add_option("file", file, ".shd file")->required();
    auto* compute_cmd = app.add_subcommand("compute", "Sutured Floer homology table");
    compute_cmd->add_option("file", file, ".shd file")->required();
    auto* polytope_cmd = app.add_subcommand("polytope", "Support and polytope");
    polytope_cmd->add_option("file", file, ".shd file")->required();
    auto* face_cmd = app.add_subcommand("face", "Face of the polytope picked out by a class");
    face_cmd->add_option("file", file, ".shd file")->required();
    face_cmd->add_option("--class", cls, "Comma-separated integer coordinates")->required()->allow_extra_args(false);
    auto* norm_cmd = app.add_subcommand("norm", "Semi-norms y and z of a class");
    norm_cmd->add_option("file", file, ".shd file")->required();
    norm_cmd->add_option("--class", cls, "Comma-separated rational coordinates")->required()->allow_extra_args(false);
    auto* depth_cmd = app.add_subcommand("depth", "Depth upper bound from the total rank");
    depth_cmd->add_option("file", file, ".shd file")->required();
    auto* build_cmd = app.add_subcommand("build", "Build a diagram");
    build_cmd->require_subcommand(1);
    auto* tpqn_cmd = build_cmd->add_subcommand("tpqn", "Solid torus with n parallel (p,q) sutures");
    tpqn_cmd->add_option("--p", p)->required();
    tpqn_cmd->add_option("--q", q)->required();
    tpqn_cmd->add_option("--n", n)->required();
    tpqn_cmd->add_option("--out", out_path, "Output file (default: stdout)");
    auto* glue_cmd = app.add_subcommand("glue", "Glue boundary circle c of f1 to circle d of f2");
    glue_cmd->add_option("f1", f1)->required();
    glue_cmd->add_option("c", c1)->required();
    glue_cmd->add_option("f2", f2)->required();
    glue_cmd->add_option("d", c2)->required();
    glue_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        s.command = app.get_subcommands().front()->get_name();
        if (*validate_cmd) return run_validate(s, file);
        if (*compute_cmd) return run_compute(s, file);
        if (*polytope_cmd) return run_polytope(s, file);
        if (*face_cmd) return run_face(s, file, cls);
        if (*norm_cmd) return run_norm(s, file, cls);
        if (*depth_cmd) return run_depth(s, file);
        if (*tpqn_cmd) return write_diagram(s, build_tpqn(p, q, n), out_path);
        if (*glue_cmd) {
            Diagram d1 = read_shd_file(f1);
            Diagram d2 = read_shd_file(f2);
            require_valid(d1);
            require_valid(d2);
            return write_diagram(s, glue(d1, c1, d2, c2), out_path);
        }
    } catch (const Error& e) {
        return s.fail(e);
    }
    return kExitFailure;
}

} // namespace sfh
