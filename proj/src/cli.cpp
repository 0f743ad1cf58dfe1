#include "latsize/cli.hpp"

#include "latsize/errors.hpp"
#include "latsize/interior.hpp"
#include "latsize/newton.hpp"
#include "latsize/oracle.hpp"
#include "latsize/shapes.hpp"
#include "latsize/size.hpp"
#include "latsize/width.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace latsize::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string input;
    std::string vertices;
    std::string poly;
    std::string shape = "sigma";
    bool json = false;
    bool witness = false;
    bool trace = false;
    bool verify = false;
};

// A --verify check failed.
class VerificationFailure : public Error {
  public:
    using Error::Error;
};

// --- input -----------------------------------------------------------------

Int parse_coordinate(std::string_view text, std::size_t offset) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view t = trim(text);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw SyntaxError("invalid coordinate '" + std::string(text) + "'", offset);
    return value;
}

// "x,y;x,y;..."
std::vector<LatticePoint> parse_vertex_list(const std::string& text) {
    std::vector<LatticePoint> points;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        std::string_view item(text.data() + start, end - start);
        if (item.find_first_not_of(" \t") != std::string_view::npos) {
            std::size_t comma = item.find(',');
            if (comma == std::string_view::npos) throw SyntaxError("expected 'x,y'", start);
            points.push_back({parse_coordinate(item.substr(0, comma), start),
                              parse_coordinate(item.substr(comma + 1), start + comma + 1)});
        }
        start = end + 1;
    }
    return points;
}

// JSON {"vertices": [[x,y],...]} or plain lines "x y".
std::vector<LatticePoint> read_vertex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot read input file '" + path + "'", 0);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    std::vector<LatticePoint> points;
    if (first != std::string::npos && text[first] == '{') {
        try {
            const Json doc = Json::parse(text);
            for (const auto& v : doc.at("vertices")) points.push_back({v.at(0).get<Int>(), v.at(1).get<Int>()});
        } catch (const Json::exception& e) {
            throw SyntaxError(std::string("malformed vertex JSON: ") + e.what(), 0);
        }
        return points;
    }
    std::istringstream lines(text);
    std::string line;
    std::size_t offset = 0;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string x, y, extra;
        if (fields >> x) {
            if (!(fields >> y) || (fields >> extra)) throw SyntaxError("expected 'x y' line", offset);
            points.push_back({parse_coordinate(x, offset), parse_coordinate(y, offset)});
        }
        offset += line.size() + 1;
    }
    return points;
}

LatticePolygon input_polygon(const Options& o) {
    const int sources = !o.input.empty() + !o.vertices.empty() + !o.poly.empty();
    if (sources != 1) throw SyntaxError("give exactly one of --input, --vertices, --poly", 0);
    if (!o.poly.empty()) return newton_polygon(parse_laurent(o.poly));
    const auto points = o.input.empty() ? parse_vertex_list(o.vertices) : read_vertex_file(o.input);
    return hull(points);
}

// --- output ----------------------------------------------------------------

Json points_json(const LatticePolygon& p) {
    Json out = Json::array();
    for (const auto& v : p.vertices()) out.push_back({v.x, v.y});
    return out;
}

Json map_json(const AffineUnimodularMap& m) {
    return Json{{"matrix", {{m.m11(), m.m12()}, {m.m21(), m.m22()}}}, {"translation", {m.t1(), m.t2()}}};
}

std::string map_text(const AffineUnimodularMap& m) {
    std::ostringstream os;
    os << "witness: matrix [[" << m.m11() << ',' << m.m12() << "],[" << m.m21() << ',' << m.m22()
       << "]] translation [" << m.t1() << ',' << m.t2() << "]";
    return os.str();
}

std::string rule_text(const SizeStep& step) {
    if (step.rule == SizeRule::ParallelEdge)
        return "ParallelEdge(" + std::to_string(step.r) + "," + std::to_string(step.s) + ")";
    return to_string(step.rule);
}

struct Report {
    Json doc;
    std::vector<std::string> lines;
};

void finish(Report& r, const std::string& command, Json value) {
    Json doc;
    doc["command"] = command;
    doc["value"] = std::move(value);
    for (auto& [k, v] : r.doc.items()) doc[k] = v;
    r.doc = std::move(doc);
}

// --- subcommands -------------------------------------------------------------

Report run_width(const Options& o) {
    const LatticePolygon p = input_polygon(o);
    const WidthResult w = lattice_width(p);
    Report r;
    r.lines.push_back(std::to_string(w.width));
    Json directions = Json::array();
    for (const auto& u : w.directions) directions.push_back({u.x, u.y});
    r.doc["directions"] = directions;
    if (o.witness && !w.directions.empty()) {
        const LatticePoint u = w.directions.front(), v = complete_basis(u);
        Int lo = 0, lo2 = 0;
        bool first = true;
        for (const auto& q : p.vertices()) {
            Int a = narrow(dot(u, q), "width"), b = narrow(dot(v, q), "width");
            lo = first ? a : std::min(lo, a);
            lo2 = first ? b : std::min(lo2, b);
            first = false;
        }
        const auto m = AffineUnimodularMap::from_rows(u, v, {-lo, -lo2});
        r.doc["witness"] = map_json(m);
        r.lines.push_back(map_text(m));
    }
    const WidthRecursion rec = lattice_width_recursive(p);
    if (o.trace) {
        Json trace = Json::array();
        for (const auto& s : rec.trace) {
            trace.push_back({{"skin", points_json(s.skin)}, {"rule", to_string(s.rule)}, {"contribution", s.contribution}});
            r.lines.push_back(to_string(s.skin) + " " + to_string(s.rule) + " " + std::to_string(s.contribution));
        }
        r.doc["trace"] = trace;
    }
    if (o.verify && rec.width != w.width)
        throw VerificationFailure("recursive width " + std::to_string(rec.width) + " != enumerated width " +
                                  std::to_string(w.width));
    finish(r, "width", w.width);
    return r;
}

Report run_size(const Options& o, TargetShape::Kind kind) {
    const LatticePolygon p = input_polygon(o);
    const SizeCertificate cert = kind == TargetShape::Kind::Sigma ? lattice_size_sigma(p) : lattice_size_square(p);
    const std::string command = kind == TargetShape::Kind::Sigma ? "sigma" : "square";
    Report r;
    r.lines.push_back(std::to_string(cert.value));
    if (o.witness) {
        r.doc["witness"] = map_json(cert.witness);
        r.lines.push_back(map_text(cert.witness));
    }
    if (o.trace) {
        Json trace = Json::array();
        for (const auto& s : cert.trace) {
            trace.push_back({{"skin", points_json(s.skin)}, {"rule", rule_text(s)}, {"contribution", s.contribution}});
            r.lines.push_back(to_string(s.skin) + " " + rule_text(s) + " " + std::to_string(s.contribution));
        }
        r.doc["trace"] = trace;
    }
    if (o.verify && !p.empty()) {
        const Int expected = oracle_size(p, kind);
        if (expected != cert.value)
            throw VerificationFailure(command + " value " + std::to_string(cert.value) + " but oracle gives " +
                                      std::to_string(expected));
        if (!image_contained(p, cert.witness, cert.shape, cert.value))
            throw VerificationFailure("witness image is not contained in the target");
        if (fit_into(p, cert.shape, cert.value - 1))
            throw VerificationFailure("polygon fits at value - 1");
    }
    finish(r, command, cert.value);
    return r;
}

Report run_box(const Options& o) {
    const LatticePolygon p = input_polygon(o);
    const BoxCertificate box = minimal_box(p);
    Report r;
    r.lines.push_back(std::to_string(box.a) + " " + std::to_string(box.b));
    if (o.witness) {
        r.doc["witness"] = map_json(box.witness);
        r.lines.push_back(map_text(box.witness));
    }
    if (o.verify) {
        const ParetoSet pareto = oracle_box_pareto(p, box.b + 2);
        if (pareto.pairs != std::vector<std::pair<Int, Int>>{{box.a, box.b}})
            throw VerificationFailure("Pareto set is not the single pair (lw, ls_square)");
    }
    finish(r, "box", Json::array({box.a, box.b}));
    return r;
}

Report run_peel(const Options& o) {
    const LatticePolygon p = input_polygon(o);
    const OnionTrace onion = onion_skins(p);
    Report r;
    r.lines.push_back(std::to_string(onion.skins.size()));
    Json trace = Json::array();
    for (const auto& skin : onion.skins) {
        const std::string shape = skin.is_two_dim() ? to_string(recognize_special(skin)) : to_string(skin.kind());
        const Int points = measures(skin).total_count;
        trace.push_back({{"skin", points_json(skin)}, {"rule", shape}, {"contribution", points}});
        r.lines.push_back(to_string(skin) + " " + shape + " " + std::to_string(points));
    }
    r.doc["trace"] = trace;
    finish(r, "peel", static_cast<Int>(onion.skins.size()));
    return r;
}

Report run_analyze(const Options& o) {
    if (o.poly.empty()) throw SyntaxError("analyze needs --poly", 0);
    const NewtonAnalysis a = analyze(parse_laurent(o.poly));
    Report r;
    r.doc["polygon"] = points_json(a.polygon);
    r.doc["interior"] = points_json(a.interior);
    r.doc["genus"] = a.genus_bound;
    r.doc["gonality"] = a.gonality;
    r.doc["s2_bound"] = a.s2_bound;
    r.doc["s11_bound"] = {a.s11_bound.first, a.s11_bound.second};
    r.doc["special"] = to_string(a.special);
    r.doc["caveats"] = a.caveats;
    r.lines.push_back("polygon " + to_string(a.polygon));
    r.lines.push_back("genus " + std::to_string(a.genus_bound));
    r.lines.push_back("gonality " + std::to_string(a.gonality));
    r.lines.push_back("s2_bound " + std::to_string(a.s2_bound));
    r.lines.push_back("s11_bound " + std::to_string(a.s11_bound.first) + " " + std::to_string(a.s11_bound.second));
    r.lines.push_back("special " + to_string(a.special));
    for (const auto& c : a.caveats) r.lines.push_back("caveat: " + c);
    if (o.verify && !a.interior.empty()) {
        if (oracle_size(a.interior, TargetShape::Kind::Sigma) != lattice_size_sigma(a.interior).value ||
            oracle_size(a.interior, TargetShape::Kind::Square) != lattice_size_square(a.interior).value)
            throw VerificationFailure("interior lattice sizes disagree with the oracle");
    }
    finish(r, "analyze", a.s2_bound);
    return r;
}

Report run_oracle(const Options& o) {
    const LatticePolygon p = input_polygon(o);
    if (p.empty()) throw PreconditionError("oracle needs a non-empty polygon");
    Report r;
    if (o.shape == "box") {
        const Int limit = lattice_size_square(p).value + 2;
        const ParetoSet pareto = oracle_box_pareto(p, limit);
        Json pairs = Json::array();
        for (const auto& [a, b] : pareto.pairs) {
            pairs.push_back({a, b});
            r.lines.push_back(std::to_string(a) + " " + std::to_string(b));
        }
        r.doc["pareto"] = pairs;
        finish(r, "oracle", pareto.pairs.size() == 1 ? Json::array({pareto.pairs[0].first, pareto.pairs[0].second})
                                                     : Json(nullptr));
        return r;
    }
    const auto kind = o.shape == "square" ? TargetShape::Kind::Square : TargetShape::Kind::Sigma;
    const Int value = oracle_size(p, kind);
    r.lines.push_back(std::to_string(value));
    finish(r, "oracle", value);
    return r;
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"Lattice width and lattice sizes of convex lattice polygons", "latsize"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_common = [&o](CLI::App* sub, bool polygon_input) {
        if (polygon_input) {
            sub->add_option("--input", o.input, "vertex file: JSON {\"vertices\":[[x,y],...]} or lines \"x y\"");
            sub->add_option("--vertices", o.vertices, "vertex list \"x,y;x,y;...\"");
        }
        sub->add_option("--poly", o.poly, "Laurent polynomial; its Newton polygon is the input");
        sub->add_flag("--json", o.json, "print a JSON document");
        sub->add_flag("--witness", o.witness, "include the certifying unimodular map");
        sub->add_flag("--trace", o.trace, "include the onion-skin rule trace");
        sub->add_flag("--verify", o.verify, "cross-check against the brute-force oracle");
        return sub;
    };
    auto* width = add_common(app.add_subcommand("width", "lattice width"), true);
    auto* sigma = add_common(app.add_subcommand("sigma", "lattice size with respect to the standard triangle"), true);
    auto* square = add_common(app.add_subcommand("square", "lattice size with respect to the unit square"), true);
    auto* box = add_common(app.add_subcommand("box", "minimal box (lattice width, square lattice size)"), true);
    auto* peel = add_common(app.add_subcommand("peel", "onion skins (iterated interior hulls)"), true);
    auto* analyze_cmd = add_common(app.add_subcommand("analyze", "curve bounds from a Newton polygon"), false);
    auto* oracle = add_common(app.add_subcommand("oracle", "brute-force lattice size or Pareto box set"), true);
    oracle->add_option("--shape", o.shape, "sigma | square | box")->check(CLI::IsMember({"sigma", "square", "box"}));

    CommandResult result;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? kOk : kSyntaxError;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    try {
        Report report;
        if (width->parsed()) report = run_width(o);
        else if (sigma->parsed()) report = run_size(o, TargetShape::Kind::Sigma);
        else if (square->parsed()) report = run_size(o, TargetShape::Kind::Square);
        else if (box->parsed()) report = run_box(o);
        else if (peel->parsed()) report = run_peel(o);
        else if (analyze_cmd->parsed()) report = run_analyze(o);
        else if (oracle->parsed()) report = run_oracle(o);
        if (o.json) {
            out << report.doc.dump() << '\n';
        } else {
            for (const auto& line : report.lines) out << line << '\n';
        }
    } catch (const SyntaxError& e) {
        result.exit_code = kSyntaxError;
        err << "syntax error: " << e.what() << '\n';
    } catch (const ZeroPolynomial& e) {
        result.exit_code = kPrecondition;
        err << "error: " << e.what() << '\n';
    } catch (const PreconditionError& e) {
        result.exit_code = kPrecondition;
        err << "error: " << e.what() << '\n';
    } catch (const GuardError& e) {
        result.exit_code = kPrecondition;
        err << "error: " << e.what() << '\n';
    } catch (const VerificationFailure& e) {
        result.exit_code = kInternal;
        err << "verification failed: " << e.what() << '\n';
    } catch (const InternalError& e) {
        result.exit_code = kInternal;
        err << "internal error: " << e.what() << '\n';
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace latsize::cli
