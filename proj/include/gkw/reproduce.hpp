#pragma once

#include <set>
#include <string>
#include <vector>

namespace gkw {

/// One row of the golden table. `pass` is always
/// |computed_value - paper_value| <= tolerance * max(1, |paper_value|).
/// Inequality checks (a margin being positive, a sequence being monotone)
/// are encoded as indicator rows: paper_value 1, computed_value 1 or 0,
/// tolerance 0, with the underlying numbers in `detail`.
struct ReproductionReport {
    std::string item;
    int criterion = 0;  ///< acceptance group 1..8
    double paper_value = 0.0;
    double computed_value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

ReproductionReport make_report(std::string item, int criterion, double paper_value, double computed_value,
                               double tolerance, std::string detail = {});

/// Row for a tolerance meant as an absolute bound on |computed - paper|.
ReproductionReport make_absolute_report(std::string item, int criterion, double paper_value,
                                        double computed_value, double bound, std::string detail = {});

/// Indicator row for a yes/no property.
ReproductionReport make_check(std::string item, int criterion, bool ok, std::string detail = {});

struct ReproduceOptions {
    std::set<int> criteria{1, 2, 3, 4, 5, 6, 7, 8};
    /// Groups run concurrently on up to this many threads (0: hardware concurrency).
    unsigned threads = 0;
};

/// The golden suite. Errors inside a group become failing rows; the
/// function itself only throws on invalid options.
std::vector<ReproductionReport> reproduce_all(const ReproduceOptions& options = {});

std::vector<ReproductionReport> reproduce_criterion(int criterion);

bool all_passed(const std::vector<ReproductionReport>& rows);

}  // namespace gkw
