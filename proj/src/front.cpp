#include "emberflow/front.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "emberflow/operators.hpp"

namespace emberflow {

namespace {

// Edges of the lattice spanned by cell centers. Horizontal edge (i,j) joins
// centers (i,j)-(i+1,j); vertical edge (i,j) joins (i,j)-(i,j+1).
std::int64_t h_edge(int i, int j, int nx) {
    return 2 * (std::int64_t(j) * nx + i);
}
std::int64_t v_edge(int i, int j, int nx) {
    return 2 * (std::int64_t(j) * nx + i) + 1;
}

struct Segment {
    std::int64_t from;
    std::int64_t to;
};

double crossing(double a, double b, double level) {
    return (level - a) / (b - a);
}

}  // namespace

std::size_t FrontSet::vertex_count() const {
    std::size_t n = 0;
    for (const auto& chain : chains) {
        n += chain.points.size();
        if (chain.closed && !chain.points.empty()) --n;
    }
    return n;
}

FrontSet extract_level_set(const ScalarField& u, double level) {
    require_valid(u.grid);
    const Grid& g = u.grid;
    const int nx = g.nx;
    const int ny = g.ny;

    std::vector<Segment> segs;
    std::unordered_map<std::int64_t, Eigen::Vector2d> points;
    std::unordered_map<std::int64_t, int> succ;
    std::unordered_map<std::int64_t, int> indeg;

    auto point_on_h = [&](int i, int j) {
        const std::int64_t id = h_edge(i, j, nx);
        if (!points.count(id)) {
            const double t = crossing(u(i, j), u(i + 1, j), level);
            points.emplace(id, Eigen::Vector2d(g.x(i) + t * g.dx, g.y(j)));
        }
        return id;
    };
    auto point_on_v = [&](int i, int j) {
        const std::int64_t id = v_edge(i, j, nx);
        if (!points.count(id)) {
            const double t = crossing(u(i, j), u(i, j + 1), level);
            points.emplace(id, Eigen::Vector2d(g.x(i), g.y(j) + t * g.dy));
        }
        return id;
    };
    auto emit = [&](std::int64_t from, std::int64_t to) {
        succ[from] = int(segs.size());
        ++indeg[to];
        segs.push_back({from, to});
    };

    for (int j = 0; j + 1 < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i) {
            const double u0 = u(i, j);
            const double u1 = u(i + 1, j);
            const double u2 = u(i + 1, j + 1);
            const double u3 = u(i, j + 1);
            int code = 0;
            if (u0 > level) code |= 1;
            if (u1 > level) code |= 2;
            if (u2 > level) code |= 4;
            if (u3 > level) code |= 8;
            if (code == 0 || code == 15) continue;

            // Burning side stays on the left of each directed segment.
            switch (code) {
                case 1:
                    emit(point_on_h(i, j), point_on_v(i, j));
                    break;
                case 2:
                    emit(point_on_v(i + 1, j), point_on_h(i, j));
                    break;
                case 3:
                    emit(point_on_v(i + 1, j), point_on_v(i, j));
                    break;
                case 4:
                    emit(point_on_h(i, j + 1), point_on_v(i + 1, j));
                    break;
                case 5: {
                    const double center = 0.25 * (u0 + u1 + u2 + u3);
                    if (center > level) {
                        emit(point_on_h(i, j), point_on_v(i + 1, j));
                        emit(point_on_h(i, j + 1), point_on_v(i, j));
                    } else {
                        emit(point_on_h(i, j), point_on_v(i, j));
                        emit(point_on_h(i, j + 1), point_on_v(i + 1, j));
                    }
                    break;
                }
                case 6:
                    emit(point_on_h(i, j + 1), point_on_h(i, j));
                    break;
                case 7:
                    emit(point_on_h(i, j + 1), point_on_v(i, j));
                    break;
                case 8:
                    emit(point_on_v(i, j), point_on_h(i, j + 1));
                    break;
                case 9:
                    emit(point_on_h(i, j), point_on_h(i, j + 1));
                    break;
                case 10: {
                    const double center = 0.25 * (u0 + u1 + u2 + u3);
                    if (center > level) {
                        emit(point_on_v(i, j), point_on_h(i, j));
                        emit(point_on_v(i + 1, j), point_on_h(i, j + 1));
                    } else {
                        emit(point_on_v(i + 1, j), point_on_h(i, j));
                        emit(point_on_v(i, j), point_on_h(i, j + 1));
                    }
                    break;
                }
                case 11:
                    emit(point_on_v(i + 1, j), point_on_h(i, j + 1));
                    break;
                case 12:
                    emit(point_on_v(i, j), point_on_v(i + 1, j));
                    break;
                case 13:
                    emit(point_on_h(i, j), point_on_v(i + 1, j));
                    break;
                case 14:
                    emit(point_on_v(i, j), point_on_h(i, j));
                    break;
                default:
                    break;
            }
        }
    }

    FrontSet front;
    front.level = level;
    std::vector<bool> visited(segs.size(), false);

    auto walk = [&](int s, bool closed) {
        FrontChain chain;
        chain.closed = closed;
        chain.points.push_back(points.at(segs[s].from));
        int cur = s;
        while (true) {
            visited[cur] = true;
            chain.points.push_back(points.at(segs[cur].to));
            auto it = succ.find(segs[cur].to);
            if (it == succ.end()) break;
            const int next = it->second;
            if (next == s || visited[next]) break;
            cur = next;
        }
        front.chains.push_back(std::move(chain));
    };

    for (int s = 0; s < int(segs.size()); ++s) {
        if (!visited[s] && indeg.count(segs[s].from) == 0) walk(s, false);
    }
    for (int s = 0; s < int(segs.size()); ++s) {
        if (!visited[s]) walk(s, true);
    }
    return front;
}

double burned_area(const ScalarField& u, double level) {
    require_valid(u.grid);
    const Grid& g = u.grid;
    const int nx = g.nx;
    const int ny = g.ny;
    const double cell = g.dx * g.dy;

    double total = 0.0;
    for (int j = 0; j + 1 < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i) {
            const double u0 = u(i, j);
            const double u1 = u(i + 1, j);
            const double u2 = u(i + 1, j + 1);
            const double u3 = u(i, j + 1);
            int code = 0;
            if (u0 > level) code |= 1;
            if (u1 > level) code |= 2;
            if (u2 > level) code |= 4;
            if (u3 > level) code |= 8;
            if (code == 0) continue;
            if (code == 15) {
                total += cell;
                continue;
            }
            const double tB = (code & 1) != ((code >> 1) & 1)
                                  ? crossing(u0, u1, level)
                                  : 0.0;
            const double tR = ((code >> 1) & 1) != ((code >> 2) & 1)
                                  ? crossing(u1, u2, level)
                                  : 0.0;
            const double tT = ((code >> 3) & 1) != ((code >> 2) & 1)
                                  ? crossing(u3, u2, level)
                                  : 0.0;
            const double tL = (code & 1) != ((code >> 3) & 1)
                                  ? crossing(u0, u3, level)
                                  : 0.0;
            double frac = 0.0;
            switch (code) {
                case 1: frac = 0.5 * tB * tL; break;
                case 2: frac = 0.5 * (1.0 - tB) * tR; break;
                case 3: frac = 0.5 * (tL + tR); break;
                case 4: frac = 0.5 * (1.0 - tT) * (1.0 - tR); break;
                case 5: {
                    const double center = 0.25 * (u0 + u1 + u2 + u3);
                    if (center > level) {
                        frac = 1.0 - 0.5 * (1.0 - tB) * tR -
                               0.5 * tT * (1.0 - tL);
                    } else {
                        frac = 0.5 * tB * tL +
                               0.5 * (1.0 - tT) * (1.0 - tR);
                    }
                    break;
                }
                case 6: frac = 0.5 * ((1.0 - tB) + (1.0 - tT)); break;
                case 7: frac = 1.0 - 0.5 * tT * (1.0 - tL); break;
                case 8: frac = 0.5 * tT * (1.0 - tL); break;
                case 9: frac = 0.5 * (tB + tT); break;
                case 10: {
                    const double center = 0.25 * (u0 + u1 + u2 + u3);
                    if (center > level) {
                        frac = 1.0 - 0.5 * tB * tL -
                               0.5 * (1.0 - tT) * (1.0 - tR);
                    } else {
                        frac = 0.5 * (1.0 - tB) * tR +
                               0.5 * tT * (1.0 - tL);
                    }
                    break;
                }
                case 11: frac = 1.0 - 0.5 * (1.0 - tT) * (1.0 - tR); break;
                case 12: frac = 0.5 * ((1.0 - tL) + (1.0 - tR)); break;
                case 13: frac = 1.0 - 0.5 * (1.0 - tB) * tR; break;
                case 14: frac = 1.0 - 0.5 * tB * tL; break;
                default: break;
            }
            total += frac * cell;
        }
    }

    // Half-cell strip outside the lattice of centers, attributed to the ring
    // cells whole, so a uniformly hot field measures the full rectangle.
    for (int i = 0; i < nx; ++i) {
        for (int j : {0, ny - 1}) {
            if (u(i, j) > level) {
                const bool corner = (i == 0 || i == nx - 1);
                total += (corner ? 0.75 : 0.5) * cell;
            }
        }
    }
    for (int j = 1; j + 1 < ny; ++j) {
        for (int i : {0, nx - 1}) {
            if (u(i, j) > level) total += 0.5 * cell;
        }
    }
    return total;
}

ScalarField curvature_field(const ScalarField& u, double eps) {
    require_valid(u.grid);
    const BoundaryCondition bc{};
    const VectorField g = gradient(u, bc);
    const ScalarField mag = grad_magnitude(g, eps);
    const int nx = u.grid.nx;
    const int ny = u.grid.ny;
    ScalarField nux(u.grid), nuy(u.grid);
    nux.values = -g.x.values / mag.values;
    nuy.values = -g.y.values / mag.values;
    ScalarField out(u.grid, 0.0);
    const double inv_2dx = 1.0 / (2.0 * u.grid.dx);
    const double inv_2dy = 1.0 / (2.0 * u.grid.dy);
    for (int j = 1; j < ny - 1; ++j) {
        for (int i = 1; i < nx - 1; ++i) {
            out(i, j) = (nux(i + 1, j) - nux(i - 1, j)) * inv_2dx +
                        (nuy(i, j + 1) - nuy(i, j - 1)) * inv_2dy;
        }
    }
    return out;
}

double chains_area(const FrontSet& front) {
    double total = 0.0;
    for (const auto& chain : front.chains) {
        if (!chain.closed || chain.points.size() < 3) continue;
        double twice = 0.0;
        for (std::size_t k = 0; k + 1 < chain.points.size(); ++k) {
            const auto& p = chain.points[k];
            const auto& q = chain.points[k + 1];
            twice += p.x() * q.y() - q.x() * p.y();
        }
        total += 0.5 * twice;
    }
    return total;
}

std::vector<FrontSample> sample_front(const FrontSet& front,
                                      const ScalarField& u,
                                      const BoundaryCondition& bc,
                                      double eps) {
    const VectorField g = gradient(u, bc);
    const ScalarField h = curvature_field(u, eps);
    std::vector<FrontSample> samples;
    for (int ci = 0; ci < int(front.chains.size()); ++ci) {
        const auto& chain = front.chains[ci];
        std::size_t count = chain.points.size();
        if (chain.closed && count > 0) --count;
        for (std::size_t k = 0; k < count; ++k) {
            const Eigen::Vector2d& p = chain.points[k];
            FrontSample s;
            s.chain_id = ci;
            s.position = p;
            const double gx = bilinear(g.x, p.x(), p.y());
            const double gy = bilinear(g.y, p.x(), p.y());
            s.grad_mag = std::sqrt(gx * gx + gy * gy);
            if (s.grad_mag < 10.0 * eps) {
                s.degenerate = true;
            } else {
                s.normal = Eigen::Vector2d(-gx / s.grad_mag, -gy / s.grad_mag);
            }
            s.H = bilinear(h, p.x(), p.y());
            samples.push_back(std::move(s));
        }
    }
    return samples;
}

std::vector<FrontSample> predicted_normal_velocity(
    std::vector<FrontSample> samples, const ScalarField& u,
    const ScalarField& theta, const InteractionKernel& kernel,
    const Eigen::Vector2d& omega, const PyrogenicModel& pyro,
    const ScalarField& c, const BoundaryCondition& bc, double eps) {
    require_same_grid(u.grid, theta.grid, "predicted_normal_velocity");
    require_same_grid(u.grid, c.grid, "predicted_normal_velocity");
    const VectorField g = gradient(u, bc);
    const ScalarField mag = grad_magnitude(g, eps);
    ScalarField nux(u.grid), nuy(u.grid);
    nux.values = -g.x.values / mag.values;
    nuy.values = -g.y.values / mag.values;
    const ScalarField d2 =
        directional_second_derivative(u, VectorField{nux, nuy});
    const ScalarField source = combustion_source(u, theta, kernel);
    const VectorField pv = pyrogenic_velocity(u, g, pyro);

    for (FrontSample& s : samples) {
        if (s.degenerate) continue;
        const double px = s.position.x();
        const double py = s.position.y();
        const double cs = bilinear(c, px, py);
        const double m = s.grad_mag;
        const Eigen::Vector2d grad = -s.normal * m;
        const Eigen::Vector2d rel(omega.x() - bilinear(pv.x, px, py),
                                  omega.y() - bilinear(pv.y, px, py));
        s.v_predicted = -cs * s.H + cs * bilinear(d2, px, py) / m +
                        bilinear(source, px, py) / m +
                        negative_part(rel.dot(grad)) / m;
    }
    return samples;
}

namespace {

double segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                        const Eigen::Vector2d& b, Eigen::Vector2d& nearest) {
    const Eigen::Vector2d ab = b - a;
    const double len2 = ab.squaredNorm();
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    nearest = a + t * ab;
    return (p - nearest).norm();
}

}  // namespace

double nearest_front_distance(const FrontSet& front,
                              const Eigen::Vector2d& point) {
    double best = std::numeric_limits<double>::infinity();
    Eigen::Vector2d q;
    for (const auto& chain : front.chains) {
        for (std::size_t k = 0; k + 1 < chain.points.size(); ++k) {
            best = std::min(best, segment_distance(point, chain.points[k],
                                                   chain.points[k + 1], q));
        }
    }
    return best;
}

std::vector<FrontSample> observed_normal_velocity(
    std::vector<FrontSample> samples, const FrontSet& later, double dt) {
    if (!(dt > 0.0)) {
        throw FrontError("observed_normal_velocity needs dt > 0");
    }
    if (later.empty()) {
        throw FrontError("front vanished between snapshots; velocity undefined");
    }
    for (FrontSample& s : samples) {
        if (s.degenerate) continue;
        double best = std::numeric_limits<double>::infinity();
        Eigen::Vector2d best_q = s.position;
        for (const auto& chain : later.chains) {
            for (std::size_t k = 0; k + 1 < chain.points.size(); ++k) {
                Eigen::Vector2d q;
                const double d = segment_distance(s.position, chain.points[k],
                                                  chain.points[k + 1], q);
                if (d < best) {
                    best = d;
                    best_q = q;
                }
            }
        }
        s.v_observed = (best_q - s.position).dot(s.normal) / dt;
    }
    return samples;
}

}  // namespace emberflow
