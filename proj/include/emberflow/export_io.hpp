#pragma once

#include <string>
#include <utility>
#include <vector>

#include "emberflow/front.hpp"
#include "emberflow/grid.hpp"
#include "emberflow/solver.hpp"

namespace emberflow {

/// Shortest decimal form of x that parses back to exactly x.
std::string format_double(double x);

/// Plain-text field dump: header `# nx ny dx dy origin_x origin_y t`, then one
/// line per y-row (j = 0 first), nx comma-separated values. Doubles are
/// printed with enough digits to round-trip bitwise.
void write_field_csv(const std::string& path, const ScalarField& f, double t);

std::pair<ScalarField, double> read_field_csv(const std::string& path);

/// One line per front vertex: chain_id,x,y,H,grad_mag,v_pred and a trailing
/// v_obs column when any sample carries an observed velocity.
void write_front_csv(const std::string& path,
                     const std::vector<FrontSample>& samples);

/// series.csv rows: t,burned_area,running_max_area,max_u.
void write_series_csv(const std::string& path,
                      const std::vector<Snapshot>& snapshots);

/// Binary 8-bit PGM of u, linearly mapped from [0, max(u)] (all-black when
/// the field is nonpositive).
void write_frame_pgm(const std::string& path, const ScalarField& u);

/// Writes u_<k>.csv, front_<k>.csv, frames/frame_<k>.pgm and series.csv under
/// out_dir, creating directories as needed. Overwrites existing files.
void export_run(const std::string& out_dir,
                const std::vector<Snapshot>& snapshots);

/// Largest relative deviation between the burned_area columns of two series
/// files (0 when both are empty); row counts must match.
double diff_series(const std::string& path_a, const std::string& path_b);

}  // namespace emberflow
