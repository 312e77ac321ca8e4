#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cvent {

struct SweepAxis {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    int steps = 1;  // number of grid points; steps = 1 pins the axis at min
};

/// A 2-D parameter sweep over one state family. Valid axis names:
///   bell:      alpha, beta, x1, x2, sigma
///   squeezed:  r
///   cat:       d, a0_sq
///   swap-bell: alpha, beta
///   swap-cat:  a, b
/// plus the placeholder "none" for a degenerate second axis. Remaining
/// parameters come from `fixed` (family defaults otherwise).
struct SweepSpec {
    std::string family;
    SweepAxis axis1;
    SweepAxis axis2;
    std::map<std::string, double> fixed;
    int tolerance_sigfigs = 5;
};

struct SweepCell {
    double axis1 = 0.0;
    double axis2 = 0.0;
    double entropy_bits = 0.0;
    bool converged = false;
    double trace_rel_err = 0.0;
};

/// Throws std::invalid_argument on bad family/axis names, steps < 1 or
/// min > max.
void validate(const SweepSpec& spec);

/// Run every cell (axis1 outer, axis2 inner, row-major). Cells execute in
/// parallel bounded by `jobs` (0 = available parallelism); per-cell
/// failures are recorded as converged=false rows.
std::vector<SweepCell> run_sweep(const SweepSpec& spec, int jobs = 0);

/// Deterministic, locale-independent CSV with header
/// axis1,axis2,entropy_bits,converged,trace_rel_err.
void write_csv(const std::vector<SweepCell>& cells, std::ostream& out);

/// Shortest-round-trip decimal at 10 significant digits, C locale always.
std::string format_sig10(double v);

/// Parse a simple key=value config ('#' comments, blank lines ignored).
std::map<std::string, std::string> parse_config(std::istream& in);
/// Build a SweepSpec from config keys: family, axis1, axis1_min, axis1_max,
/// axis1_steps, axis2..., tolerance_sigfigs; any other numeric key becomes
/// a fixed parameter.
SweepSpec sweep_from_config(const std::map<std::string, std::string>& kv);

}  // namespace cvent
