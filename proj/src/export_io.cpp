#include "emberflow/export_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "emberflow/errors.hpp"

namespace emberflow {

std::string format_double(double x) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

namespace {

double parse_double(const std::string& tok, const std::string& path,
                    int line) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') {
        throw IoError(path + ": line " + std::to_string(line) +
                      ": bad number '" + tok + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
    std::ofstream out(path, mode);
    if (!out) throw IoError("cannot open " + path + " for writing");
    return out;
}

}  // namespace

void write_field_csv(const std::string& path, const ScalarField& f, double t) {
    std::ofstream out = open_out(path, std::ios::out);
    out << "# " << f.grid.nx << ' ' << f.grid.ny << ' '
        << format_double(f.grid.dx) << ' ' << format_double(f.grid.dy) << ' '
        << format_double(f.grid.origin.x()) << ' '
        << format_double(f.grid.origin.y()) << ' ' << format_double(t) << '\n';
    for (int j = 0; j < f.grid.ny; ++j) {
        for (int i = 0; i < f.grid.nx; ++i) {
            if (i) out << ',';
            out << format_double(f(i, j));
        }
        out << '\n';
    }
    if (!out.good()) throw IoError("write failed on " + path);
}

std::pair<ScalarField, double> read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.size() < 2 || line[0] != '#') {
        throw IoError(path + ": missing field header");
    }
    std::istringstream head(line.substr(1));
    Grid g;
    double t = 0.0;
    if (!(head >> g.nx >> g.ny >> g.dx >> g.dy >> g.origin.x() >>
          g.origin.y() >> t)) {
        throw IoError(path + ": malformed field header");
    }
    require_valid(g);
    ScalarField f(g);
    for (int j = 0; j < g.ny; ++j) {
        if (!std::getline(in, line)) {
            throw IoError(path + ": expected " + std::to_string(g.ny) +
                          " data rows, got " + std::to_string(j));
        }
        const auto toks = split(strip(line), ',');
        if (int(toks.size()) != g.nx) {
            throw IoError(path + ": line " + std::to_string(j + 2) + ": expected " +
                          std::to_string(g.nx) + " values, got " +
                          std::to_string(toks.size()));
        }
        for (int i = 0; i < g.nx; ++i) {
            f(i, j) = parse_double(strip(toks[i]), path, j + 2);
        }
    }
    return {std::move(f), t};
}

void write_front_csv(const std::string& path,
                     const std::vector<FrontSample>& samples) {
    const bool has_obs =
        std::any_of(samples.begin(), samples.end(),
                    [](const FrontSample& s) { return s.v_observed.has_value(); });
    std::ofstream out = open_out(path, std::ios::out);
    out << "# chain_id,x,y,H,grad_mag,v_pred" << (has_obs ? ",v_obs" : "")
        << '\n';
    for (const FrontSample& s : samples) {
        out << s.chain_id << ',' << format_double(s.position.x()) << ','
            << format_double(s.position.y()) << ',' << format_double(s.H)
            << ',' << format_double(s.grad_mag) << ','
            << format_double(s.v_predicted);
        if (has_obs) {
            out << ',';
            if (s.v_observed) out << format_double(*s.v_observed);
        }
        out << '\n';
    }
    if (!out.good()) throw IoError("write failed on " + path);
}

void write_series_csv(const std::string& path,
                      const std::vector<Snapshot>& snapshots) {
    std::ofstream out = open_out(path, std::ios::out);
    out << "t,burned_area,running_max_area,max_u\n";
    for (const Snapshot& s : snapshots) {
        out << format_double(s.t) << ',' << format_double(s.burned_area) << ','
            << format_double(s.running_max_area) << ','
            << format_double(s.max_u) << '\n';
    }
    if (!out.good()) throw IoError("write failed on " + path);
}

void write_frame_pgm(const std::string& path, const ScalarField& u) {
    std::ofstream out = open_out(path, std::ios::binary);
    const int nx = u.grid.nx;
    const int ny = u.grid.ny;
    out << "P5\n" << nx << ' ' << ny << "\n255\n";
    const double maxu = u.values.maxCoeff();
    std::vector<unsigned char> row(nx);
    for (int j = ny - 1; j >= 0; --j) {
        for (int i = 0; i < nx; ++i) {
            double v = 0.0;
            if (maxu > 0.0) v = std::clamp(u(i, j) / maxu, 0.0, 1.0);
            row[i] = static_cast<unsigned char>(std::lround(255.0 * v));
        }
        out.write(reinterpret_cast<const char*>(row.data()), nx);
    }
    if (!out.good()) throw IoError("write failed on " + path);
}

void export_run(const std::string& out_dir,
                const std::vector<Snapshot>& snapshots) {
    if (snapshots.empty()) throw Error("no snapshots to export");
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(fs::path(out_dir) / "frames", ec);
    if (ec) {
        throw IoError("cannot create " + out_dir + "/frames: " + ec.message());
    }
    for (std::size_t k = 0; k < snapshots.size(); ++k) {
        const Snapshot& snap = snapshots[k];
        const std::string tag = std::to_string(k);
        write_field_csv((fs::path(out_dir) / ("u_" + tag + ".csv")).string(),
                        snap.u, snap.t);
        write_front_csv(
            (fs::path(out_dir) / ("front_" + tag + ".csv")).string(),
            snap.samples);
        write_frame_pgm((fs::path(out_dir) / "frames" /
                         ("frame_" + tag + ".pgm")).string(),
                        snap.u);
    }
    write_series_csv((fs::path(out_dir) / "series.csv").string(), snapshots);
}

namespace {

std::vector<std::vector<double>> read_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw IoError(path + ": empty series file");
    std::vector<std::vector<double>> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (strip(line).empty()) continue;
        const auto toks = split(strip(line), ',');
        std::vector<double> row;
        row.reserve(toks.size());
        for (const auto& tok : toks) {
            row.push_back(parse_double(strip(tok), path, lineno));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

double diff_series(const std::string& path_a, const std::string& path_b) {
    const auto a = read_series(path_a);
    const auto b = read_series(path_b);
    if (a.size() != b.size()) {
        throw Error("series row counts differ: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() < 2 || b[r].size() < 2) {
            throw Error("series rows need at least 2 columns");
        }
        const double va = a[r][1];
        const double vb = b[r][1];
        const double denom = std::max({std::abs(va), std::abs(vb), 1e-300});
        worst = std::max(worst, std::abs(va - vb) / denom);
    }
    return worst;
}

}  // namespace emberflow
