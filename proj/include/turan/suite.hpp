#ifndef TURAN_SUITE_HPP
#define TURAN_SUITE_HPP

#include <map>
#include <string>
#include <vector>

namespace turan {

enum class OutputFormat { Text, Json, Csv };

/// Parameters of the invariant sweep run by `turan verify`.
struct SuiteConfig {
    std::vector<double> lambdas{-0.49, -0.25, -0.1, 0.1, 0.5, 1.0, 2.5, 10.0};
    int n_min = 1;
    int n_max = 60;
    int grid = 1001;
    std::map<std::string, double> tolerance_overrides;
    OutputFormat format = OutputFormat::Text;

    /// Throws DomainError for grid < 3, lambda <= -1/2, an empty degree range
    /// or an unknown tolerance name.
    void validate() const;
    double tolerance(const std::string& name) const;
};

/// Default tolerance of every named check.
const std::map<std::string, double>& default_tolerances();

struct SuiteCheck {
    std::string module;
    std::string name;
    bool passed = false;
    double worst = 0.0;      // worst observed error or margin
    double tolerance = 0.0;
    std::string detail;
};

/// Runs every invariant of the library over the configured parameter grid.
/// Checks run concurrently; the result order is fixed.
std::vector<SuiteCheck> run_suite(const SuiteConfig& config);

/// Evenly spaced points a + (b - a) i / (count - 1), endpoints exact.
std::vector<double> grid_points(double a, double b, int count);

} // namespace turan

#endif
