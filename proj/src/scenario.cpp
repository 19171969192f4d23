#include "emberflow/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "emberflow/export_io.hpp"

namespace emberflow {

namespace {

struct Raw {
    std::string value;
    int line = 0;
};

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool identifier_ok(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' &&
            ch != '-') {
            return false;
        }
    }
    return true;
}

std::map<std::string, Raw> tokenize(const std::string& text) {
    std::map<std::string, Raw> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Strip comments, but not a '#' inside a quoted value.
        bool quoted = false;
        std::string body;
        for (char ch : line) {
            if (ch == '"') quoted = !quoted;
            if (ch == '#' && !quoted) break;
            body.push_back(ch);
        }
        body = strip(body);
        if (body.empty()) continue;
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos) {
            throw ParseError(lineno, "expected 'section.key = value'");
        }
        const std::string lhs = strip(body.substr(0, eq));
        const std::string rhs = strip(body.substr(eq + 1));
        const std::size_t dot = lhs.find('.');
        if (dot == std::string::npos || lhs.find('.', dot + 1) != std::string::npos) {
            throw ParseError(lineno, "key must look like section.key, got '" +
                                         lhs + "'");
        }
        if (!identifier_ok(lhs.substr(0, dot)) ||
            !identifier_ok(lhs.substr(dot + 1))) {
            throw ParseError(lineno, "malformed key '" + lhs + "'");
        }
        if (rhs.empty()) throw ParseError(lineno, "missing value for " + lhs);
        if (kv.count(lhs)) {
            throw ParseError(lineno, "duplicate key " + lhs);
        }
        kv[lhs] = Raw{rhs, lineno};
    }
    return kv;
}

double parse_real(const Raw& raw, const std::string& key) {
    char* end = nullptr;
    const double v = std::strtod(raw.value.c_str(), &end);
    if (end == raw.value.c_str() || *strip(end).c_str() != '\0' ||
        !std::isfinite(v)) {
        throw ParseError(raw.line, key + ": expected a finite real, got '" +
                                       raw.value + "'");
    }
    return v;
}

int parse_int(const Raw& raw, const std::string& key) {
    char* end = nullptr;
    const long v = std::strtol(raw.value.c_str(), &end, 10);
    if (end == raw.value.c_str() || *strip(end).c_str() != '\0') {
        throw ParseError(raw.line, key + ": expected an integer, got '" +
                                       raw.value + "'");
    }
    return static_cast<int>(v);
}

bool parse_bool(const Raw& raw, const std::string& key) {
    if (raw.value == "true") return true;
    if (raw.value == "false") return false;
    throw ParseError(raw.line, key + ": expected true or false, got '" +
                                   raw.value + "'");
}

std::string parse_string(const Raw& raw, const std::string& key) {
    std::string v = raw.value;
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
        v = v.substr(1, v.size() - 2);
    } else if (v.find('"') != std::string::npos) {
        throw ParseError(raw.line, key + ": unbalanced quotes");
    }
    if (v.empty()) throw ParseError(raw.line, key + ": empty value");
    return v;
}

std::vector<double> parse_real_list(const std::string& body, const Raw& raw,
                                    const std::string& key) {
    std::vector<double> out;
    std::string cur;
    auto flush = [&]() {
        const std::string tok = strip(cur);
        cur.clear();
        if (tok.empty()) {
            throw ParseError(raw.line, key + ": empty element");
        }
        out.push_back(parse_real(Raw{tok, raw.line}, key));
    };
    for (char ch : body) {
        if (ch == ',') {
            flush();
        } else {
            cur.push_back(ch);
        }
    }
    flush();
    return out;
}

std::array<double, 2> parse_vec2(const Raw& raw, const std::string& key) {
    const std::string v = raw.value;
    if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
        throw ParseError(raw.line, key + ": expected [x, y]");
    }
    const auto vals = parse_real_list(v.substr(1, v.size() - 2), raw, key);
    if (vals.size() != 2) {
        throw ParseError(raw.line, key + ": expected 2 components, got " +
                                       std::to_string(vals.size()));
    }
    return {vals[0], vals[1]};
}

std::vector<std::vector<double>> parse_rows(const Raw& raw,
                                            const std::string& key,
                                            std::size_t arity) {
    const std::string v = raw.value;
    if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
        throw ParseError(raw.line, key + ": expected [[...], ...]");
    }
    std::vector<std::vector<double>> rows;
    std::size_t pos = 1;
    const std::size_t last = v.size() - 1;
    while (pos < last) {
        if (v[pos] == ',' || std::isspace(static_cast<unsigned char>(v[pos]))) {
            ++pos;
            continue;
        }
        if (v[pos] != '[') {
            throw ParseError(raw.line, key + ": expected '[' in array");
        }
        const std::size_t close = v.find(']', pos);
        if (close == std::string::npos || close > last) {
            throw ParseError(raw.line, key + ": unterminated row");
        }
        const auto vals =
            parse_real_list(v.substr(pos + 1, close - pos - 1), raw, key);
        if (vals.size() != arity) {
            throw ParseError(raw.line, key + ": rows need " +
                                           std::to_string(arity) +
                                           " values, got " +
                                           std::to_string(vals.size()));
        }
        rows.push_back(vals);
        pos = close + 1;
    }
    return rows;
}

double point_segment_distance(double px, double py, double ax, double ay,
                              double bx, double by) {
    const double abx = bx - ax;
    const double aby = by - ay;
    const double len2 = abx * abx + aby * aby;
    double t = 0.0;
    if (len2 > 0.0) {
        t = std::clamp(((px - ax) * abx + (py - ay) * aby) / len2, 0.0, 1.0);
    }
    const double qx = ax + t * abx;
    const double qy = ay + t * aby;
    return std::hypot(px - qx, py - qy);
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ScenarioError(std::string(what) + " must be positive");
    }
}

}  // namespace

ScalarField build_initial(const InitialCondition& cond, const Grid& grid,
                          const BoundaryCondition& bc) {
    require_valid(grid);

    if (const auto* ff = std::get_if<FieldFile>(&cond)) {
        auto [f, t] = read_field_csv(ff->path);
        (void)t;
        if (f.grid != grid) {
            throw ScenarioError("initial field file " + ff->path +
                                " does not match the scenario grid");
        }
        apply_boundary_ring(f, bc);
        return f;
    }

    const double half = std::max(grid.dx, grid.dy);  // taper spans 2 cells
    const double x_lo = grid.origin.x() - 0.5 * grid.dx;
    const double x_hi = grid.origin.x() + (grid.nx - 0.5) * grid.dx;
    const double y_lo = grid.origin.y() - 0.5 * grid.dy;
    const double y_hi = grid.origin.y() + (grid.ny - 0.5) * grid.dy;
    auto require_inside = [&](double lo_x, double hi_x, double lo_y,
                              double hi_y) {
        if (lo_x < x_lo || hi_x > x_hi || lo_y < y_lo || hi_y > y_hi) {
            throw ScenarioError("initial shape leaves the domain");
        }
    };

    double peak = 0.0;
    std::function<double(double, double)> dist;

    if (const auto* p = std::get_if<PointHotspot>(&cond)) {
        require_positive(p->radius, "initial.radius");
        require_positive(p->peak, "initial.peak");
        peak = p->peak;
        const double cx = p->center[0];
        const double cy = p->center[1];
        const double reach = p->radius + half;
        require_inside(cx - reach, cx + reach, cy - reach, cy + reach);
        dist = [=](double x, double y) {
            return std::hypot(x - cx, y - cy) - p->radius;
        };
    } else if (const auto* v = std::get_if<VShape>(&cond)) {
        require_positive(v->arm_length, "initial.arm_length");
        require_positive(v->width, "initial.width");
        require_positive(v->peak, "initial.peak");
        if (!(v->angle_degrees > 0.0 && v->angle_degrees < 180.0)) {
            throw ScenarioError("initial.angle_degrees must lie in (0, 180)");
        }
        peak = v->peak;
        const double ha = v->angle_degrees * std::numbers::pi / 360.0;
        const double vx = v->vertex[0];
        const double vy = v->vertex[1];
        const double e1x = vx + v->arm_length * std::cos(ha);
        const double e1y = vy + v->arm_length * std::sin(ha);
        const double e2x = e1x;
        const double e2y = vy - v->arm_length * std::sin(ha);
        const double reach = 0.5 * v->width + half;
        require_inside(std::min({vx, e1x, e2x}) - reach,
                       std::max({vx, e1x, e2x}) + reach,
                       std::min({vy, e1y, e2y}) - reach,
                       std::max({vy, e1y, e2y}) + reach);
        const double w2 = 0.5 * v->width;
        dist = [=](double x, double y) {
            const double d1 = point_segment_distance(x, y, vx, vy, e1x, e1y);
            const double d2 = point_segment_distance(x, y, vx, vy, e2x, e2y);
            return std::min(d1, d2) - w2;
        };
    } else {
        const auto& r = std::get<SquareRing>(cond);
        require_positive(r.side, "initial.side");
        require_positive(r.thickness, "initial.thickness");
        require_positive(r.peak, "initial.peak");
        peak = r.peak;
        const double cx = r.center[0];
        const double cy = r.center[1];
        const double reach = 0.5 * r.side + 0.5 * r.thickness + half;
        require_inside(cx - reach, cx + reach, cy - reach, cy + reach);
        dist = [=](double x, double y) {
            const double m =
                std::max(std::abs(x - cx), std::abs(y - cy));
            return std::abs(m - 0.5 * r.side) - 0.5 * r.thickness;
        };
    }

    ScalarField f(grid, 0.0);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const double d = dist(grid.x(i), grid.y(j));
            if (d <= -half) {
                f(i, j) = peak;
            } else if (d < half) {
                f(i, j) = peak * 0.5 *
                          (1.0 - std::sin(0.5 * std::numbers::pi * d / half));
            }
        }
    }
    apply_boundary_ring(f, bc);
    return f;
}

ScenarioConfig parse_scenario_config(const std::string& text) {
    auto kv = tokenize(text);
    ScenarioConfig cfg;

    auto take = [&](const std::string& key) -> std::optional<Raw> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        Raw r = it->second;
        kv.erase(it);
        return r;
    };
    auto reject = [&](const std::string& key, const std::string& why) {
        if (auto r = take(key)) {
            throw ParseError(r->line, key + " is only valid when " + why);
        }
    };

    if (auto r = take("domain.nx")) cfg.nx = parse_int(*r, "domain.nx");
    if (auto r = take("domain.ny")) cfg.ny = parse_int(*r, "domain.ny");
    if (auto r = take("domain.lx")) cfg.lx = parse_real(*r, "domain.lx");
    if (auto r = take("domain.ly")) cfg.ly = parse_real(*r, "domain.ly");
    if (auto r = take("diffusion.c")) cfg.c = parse_real(*r, "diffusion.c");

    if (auto r = take("ignition.type")) {
        cfg.ignition_type = parse_string(*r, "ignition.type");
        if (cfg.ignition_type != "constant" && cfg.ignition_type != "fuel") {
            throw ParseError(r->line, "ignition.type must be constant or fuel");
        }
    }
    if (cfg.ignition_type == "constant") {
        if (auto r = take("ignition.theta0")) {
            cfg.theta0 = parse_real(*r, "ignition.theta0");
        }
        reject("ignition.theta_bar", "ignition.type = fuel");
        reject("ignition.fuel", "ignition.type = fuel");
        reject("ignition.theta_floor", "ignition.type = fuel");
    } else {
        if (auto r = take("ignition.theta_bar")) {
            cfg.theta_bar = parse_real(*r, "ignition.theta_bar");
        }
        if (auto r = take("ignition.fuel")) {
            cfg.fuel = parse_real(*r, "ignition.fuel");
        }
        if (auto r = take("ignition.theta_floor")) {
            cfg.theta_floor = parse_string(*r, "ignition.theta_floor");
            if (cfg.theta_floor != "none" && cfg.theta_floor != "theta_bar") {
                throw ParseError(r->line,
                                 "ignition.theta_floor must be none or theta_bar");
            }
        }
        reject("ignition.theta0", "ignition.type = constant");
    }

    if (auto r = take("kernel.type")) {
        cfg.kernel_type = parse_string(*r, "kernel.type");
        if (cfg.kernel_type != "zero" && cfg.kernel_type != "dirac" &&
            cfg.kernel_type != "bump") {
            throw ParseError(r->line, "kernel.type must be zero, dirac or bump");
        }
    }
    if (cfg.kernel_type == "bump") {
        if (auto r = take("kernel.radius")) {
            cfg.kernel_radius = parse_real(*r, "kernel.radius");
        }
        if (auto r = take("kernel.mass")) {
            cfg.kernel_mass = parse_real(*r, "kernel.mass");
        }
    } else if (cfg.kernel_type == "dirac") {
        if (auto r = take("kernel.mass")) {
            cfg.kernel_mass = parse_real(*r, "kernel.mass");
        }
        reject("kernel.radius", "kernel.type = bump");
    } else {
        reject("kernel.radius", "kernel.type = bump");
        reject("kernel.mass", "kernel.type = dirac or bump");
    }

    if (auto r = take("wind.type")) {
        cfg.wind_type = parse_string(*r, "wind.type");
        if (cfg.wind_type != "constant" && cfg.wind_type != "table") {
            throw ParseError(r->line, "wind.type must be constant or table");
        }
    }
    if (cfg.wind_type == "constant") {
        if (auto r = take("wind.omega")) {
            cfg.omega = parse_vec2(*r, "wind.omega");
        }
        reject("wind.table", "wind.type = table");
    } else {
        if (auto r = take("wind.table")) {
            cfg.wind_table.clear();
            for (const auto& row : parse_rows(*r, "wind.table", 3)) {
                cfg.wind_table.push_back({row[0], row[1], row[2]});
            }
        }
        reject("wind.omega", "wind.type = constant");
    }
    if (auto r = take("wind.negative_part")) {
        cfg.wind_negative_part = parse_bool(*r, "wind.negative_part");
    }

    if (auto r = take("pyro.alpha")) cfg.pyro_alpha = parse_real(*r, "pyro.alpha");
    if (auto r = take("pyro.eps")) cfg.pyro_eps = parse_real(*r, "pyro.eps");
    if (auto r = take("pyro.beta")) {
        cfg.beta.clear();
        for (const auto& row : parse_rows(*r, "pyro.beta", 2)) {
            cfg.beta.push_back({row[0], row[1]});
        }
    }

    std::string initial_type = "point";
    if (auto r = take("initial.type")) {
        initial_type = parse_string(*r, "initial.type");
    }
    auto reject_shapes = [&](const std::string& keep) {
        struct KeyFor {
            const char* key;
            const char* type;
        };
        static const KeyFor table[] = {
            {"initial.center", "point or square-ring"},
            {"initial.radius", "point"},
            {"initial.vertex", "vshape"},
            {"initial.angle_degrees", "vshape"},
            {"initial.arm_length", "vshape"},
            {"initial.width", "vshape"},
            {"initial.side", "square-ring"},
            {"initial.thickness", "square-ring"},
            {"initial.peak", "point, vshape or square-ring"},
            {"initial.path", "file"},
        };
        for (const auto& e : table) {
            if (std::string(e.type).find(keep) != std::string::npos) continue;
            reject(e.key, "initial.type = " + std::string(e.type));
        }
    };
    if (initial_type == "point") {
        PointHotspot p;
        if (auto r = take("initial.center")) p.center = parse_vec2(*r, "initial.center");
        if (auto r = take("initial.radius")) p.radius = parse_real(*r, "initial.radius");
        if (auto r = take("initial.peak")) p.peak = parse_real(*r, "initial.peak");
        cfg.initial = p;
        reject_shapes("point");
    } else if (initial_type == "vshape") {
        VShape v;
        if (auto r = take("initial.vertex")) v.vertex = parse_vec2(*r, "initial.vertex");
        if (auto r = take("initial.angle_degrees")) {
            v.angle_degrees = parse_real(*r, "initial.angle_degrees");
        }
        if (auto r = take("initial.arm_length")) {
            v.arm_length = parse_real(*r, "initial.arm_length");
        }
        if (auto r = take("initial.width")) v.width = parse_real(*r, "initial.width");
        if (auto r = take("initial.peak")) v.peak = parse_real(*r, "initial.peak");
        cfg.initial = v;
        reject_shapes("vshape");
    } else if (initial_type == "square-ring") {
        SquareRing sr;
        if (auto r = take("initial.center")) sr.center = parse_vec2(*r, "initial.center");
        if (auto r = take("initial.side")) sr.side = parse_real(*r, "initial.side");
        if (auto r = take("initial.thickness")) {
            sr.thickness = parse_real(*r, "initial.thickness");
        }
        if (auto r = take("initial.peak")) sr.peak = parse_real(*r, "initial.peak");
        cfg.initial = sr;
        reject_shapes("square-ring");
    } else if (initial_type == "file") {
        FieldFile ff;
        if (auto r = take("initial.path")) {
            ff.path = parse_string(*r, "initial.path");
        } else {
            throw ScenarioError("initial.path is required when initial.type = file");
        }
        cfg.initial = ff;
        reject_shapes("file");
    } else {
        throw ScenarioError(
            "initial.type must be point, vshape, square-ring or file");
    }

    if (auto r = take("run.t_end")) cfg.t_end = parse_real(*r, "run.t_end");
    if (auto r = take("run.snapshot_every")) {
        cfg.snapshot_every = parse_real(*r, "run.snapshot_every");
    }
    if (auto r = take("run.front_level")) {
        cfg.front_level = parse_real(*r, "run.front_level");
    }

    if (!kv.empty()) {
        auto worst = kv.begin();
        for (auto it = kv.begin(); it != kv.end(); ++it) {
            if (it->second.line < worst->second.line) worst = it;
        }
        throw ParseError(worst->second.line, "unknown key " + worst->first);
    }
    return cfg;
}

std::string serialize_scenario_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    auto vec2 = [](const std::array<double, 2>& v) {
        return "[" + format_double(v[0]) + ", " + format_double(v[1]) + "]";
    };
    out << "domain.nx = " << cfg.nx << '\n';
    out << "domain.ny = " << cfg.ny << '\n';
    out << "domain.lx = " << format_double(cfg.lx) << '\n';
    out << "domain.ly = " << format_double(cfg.ly) << '\n';
    out << "diffusion.c = " << format_double(cfg.c) << '\n';
    out << "ignition.type = " << cfg.ignition_type << '\n';
    if (cfg.ignition_type == "constant") {
        out << "ignition.theta0 = " << format_double(cfg.theta0) << '\n';
    } else {
        out << "ignition.theta_bar = " << format_double(cfg.theta_bar) << '\n';
        out << "ignition.fuel = " << format_double(cfg.fuel) << '\n';
        out << "ignition.theta_floor = " << cfg.theta_floor << '\n';
    }
    out << "kernel.type = " << cfg.kernel_type << '\n';
    if (cfg.kernel_type == "bump") {
        out << "kernel.radius = " << format_double(cfg.kernel_radius) << '\n';
    }
    if (cfg.kernel_type != "zero") {
        out << "kernel.mass = " << format_double(cfg.kernel_mass) << '\n';
    }
    out << "wind.type = " << cfg.wind_type << '\n';
    if (cfg.wind_type == "constant") {
        out << "wind.omega = " << vec2(cfg.omega) << '\n';
    } else {
        out << "wind.table = [";
        for (std::size_t k = 0; k < cfg.wind_table.size(); ++k) {
            if (k) out << ", ";
            out << "[" << format_double(cfg.wind_table[k][0]) << ", "
                << format_double(cfg.wind_table[k][1]) << ", "
                << format_double(cfg.wind_table[k][2]) << "]";
        }
        out << "]\n";
    }
    out << "wind.negative_part = " << (cfg.wind_negative_part ? "true" : "false")
        << '\n';
    out << "pyro.alpha = " << format_double(cfg.pyro_alpha) << '\n';
    out << "pyro.eps = " << format_double(cfg.pyro_eps) << '\n';
    if (!cfg.beta.empty()) {
        out << "pyro.beta = [";
        for (std::size_t k = 0; k < cfg.beta.size(); ++k) {
            if (k) out << ", ";
            out << "[" << format_double(cfg.beta[k][0]) << ", "
                << format_double(cfg.beta[k][1]) << "]";
        }
        out << "]\n";
    }
    if (const auto* p = std::get_if<PointHotspot>(&cfg.initial)) {
        out << "initial.type = point\n";
        out << "initial.center = " << vec2(p->center) << '\n';
        out << "initial.radius = " << format_double(p->radius) << '\n';
        out << "initial.peak = " << format_double(p->peak) << '\n';
    } else if (const auto* v = std::get_if<VShape>(&cfg.initial)) {
        out << "initial.type = vshape\n";
        out << "initial.vertex = " << vec2(v->vertex) << '\n';
        out << "initial.angle_degrees = " << format_double(v->angle_degrees)
            << '\n';
        out << "initial.arm_length = " << format_double(v->arm_length) << '\n';
        out << "initial.width = " << format_double(v->width) << '\n';
        out << "initial.peak = " << format_double(v->peak) << '\n';
    } else if (const auto* sr = std::get_if<SquareRing>(&cfg.initial)) {
        out << "initial.type = square-ring\n";
        out << "initial.center = " << vec2(sr->center) << '\n';
        out << "initial.side = " << format_double(sr->side) << '\n';
        out << "initial.thickness = " << format_double(sr->thickness) << '\n';
        out << "initial.peak = " << format_double(sr->peak) << '\n';
    } else {
        const auto& ff = std::get<FieldFile>(cfg.initial);
        out << "initial.type = file\n";
        out << "initial.path = \"" << ff.path << "\"\n";
    }
    out << "run.t_end = " << format_double(cfg.t_end) << '\n';
    out << "run.snapshot_every = " << format_double(cfg.snapshot_every) << '\n';
    if (cfg.front_level) {
        out << "run.front_level = " << format_double(*cfg.front_level) << '\n';
    }
    return out.str();
}

Scenario build_scenario(const ScenarioConfig& cfg) {
    if (cfg.nx < 3 || cfg.ny < 3) {
        throw ScenarioError("domain needs at least 3 cells per axis");
    }
    require_positive(cfg.lx, "domain.lx");
    require_positive(cfg.ly, "domain.ly");
    Grid grid;
    grid.nx = cfg.nx;
    grid.ny = cfg.ny;
    grid.dx = cfg.lx / cfg.nx;
    grid.dy = cfg.ly / cfg.ny;
    grid.origin = Eigen::Vector2d(0.5 * grid.dx, 0.5 * grid.dy);
    require_valid(grid);

    Scenario s;
    s.grid = grid;
    s.c = ScalarField(grid, cfg.c);

    if (cfg.ignition_type == "constant") {
        s.ignition = ConstantTheta{cfg.theta0};
    } else if (cfg.ignition_type == "fuel") {
        FuelState fs(ScalarField(grid, cfg.fuel), ScalarField(grid, 0.0),
                     ScalarField(grid, cfg.theta_bar));
        s.ignition = FuelMemory{std::move(fs), cfg.theta_floor == "theta_bar"};
    } else {
        throw ScenarioError("ignition.type must be constant or fuel");
    }

    if (cfg.kernel_type == "zero") {
        s.kernel = zero_kernel();
    } else if (cfg.kernel_type == "dirac") {
        s.kernel = delta_kernel(cfg.kernel_mass, grid);
    } else if (cfg.kernel_type == "bump") {
        s.kernel = build_dirac_kernel(cfg.kernel_radius, cfg.kernel_mass, grid);
    } else {
        throw ScenarioError("kernel.type must be zero, dirac or bump");
    }

    if (cfg.wind_type == "constant") {
        s.wind = ConstantWind{Eigen::Vector2d(cfg.omega[0], cfg.omega[1])};
    } else if (cfg.wind_type == "table") {
        WindTable wt;
        for (const auto& row : cfg.wind_table) {
            wt.entries.emplace_back(row[0], Eigen::Vector2d(row[1], row[2]));
        }
        s.wind = std::move(wt);
    } else {
        throw ScenarioError("wind.type must be constant or table");
    }

    s.pyro.alpha = cfg.pyro_alpha;
    s.pyro.eps = cfg.pyro_eps;
    for (const auto& row : cfg.beta) {
        s.pyro.beta.emplace_back(row[0], row[1]);
    }

    s.u0 = build_initial(cfg.initial, grid, s.bc);
    s.t_end = cfg.t_end;
    s.snapshot_every = cfg.snapshot_every;
    s.wind_negative_part = cfg.wind_negative_part;
    s.front_level = cfg.front_level.value_or(
        cfg.ignition_type == "constant" ? cfg.theta0 : cfg.theta_bar);

    validate(s);
    return s;
}

Scenario parse_scenario(const std::string& text) {
    return build_scenario(parse_scenario_config(text));
}

std::vector<std::string> preset_names() {
    return {"heat-only", "point-e14", "vshape", "square-ring"};
}

ScenarioConfig preset_config(const std::string& name) {
    ScenarioConfig cfg;
    if (name == "heat-only") {
        cfg.kernel_type = "zero";
        cfg.t_end = 1.0;
        cfg.snapshot_every = 0.1;
        return cfg;
    }
    if (name == "point-e14") {
        cfg.omega = {-1.0, 0.4};
        // strong enough that the trailing edge never cools back below the
        // ignition level while the head runs downwind
        cfg.kernel_mass = 3.0;
        cfg.initial = PointHotspot{{0.78, 0.32}, 0.04, 2.0};
        cfg.t_end = 0.5;
        cfg.snapshot_every = 0.05;
        return cfg;
    }
    if (name == "vshape") {
        cfg.kernel_mass = 6.0;
        cfg.initial = VShape{{0.3, 0.5}, 30.0, 0.35, 0.04, 2.0};
        cfg.t_end = 0.5;
        cfg.snapshot_every = 0.05;
        return cfg;
    }
    if (name == "square-ring") {
        cfg.kernel_mass = 6.0;
        cfg.initial = SquareRing{{0.5, 0.5}, 0.2, 0.05, 2.0};
        cfg.t_end = 1.0;
        cfg.snapshot_every = 0.1;
        return cfg;
    }
    throw ScenarioError("unknown preset '" + name +
                        "'; available: heat-only, point-e14, vshape, square-ring");
}

}  // namespace emberflow
