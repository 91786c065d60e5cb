#pragma once

#include <string>
#include <vector>

namespace lavr {

/// One numerical bound: `passed` iff the measured value respects the bound
/// in the stated direction.
struct BoundCheck {
    std::string name;
    double value;
    double bound;
    bool upper;  // value <= bound when true, value >= bound otherwise
    bool passed;
};

std::vector<std::string> verify_suite_names();

/// Runs the named property suite ("projector", "operator", "initval", "solver").
std::vector<BoundCheck> verify_suite(const std::string& suite);

}  // namespace lavr
