#pragma once

#include "qtoda/param_point.hpp"
#include "qtoda/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace th {

inline qtoda::Rational rat(const std::string& text) { return qtoda::Rational::parse(text); }

inline std::vector<qtoda::Rational> rats(std::initializer_list<const char*> parts) {
    std::vector<qtoda::Rational> out;
    for (const char* p : parts)
        out.push_back(qtoda::Rational::parse(p));
    return out;
}

inline std::vector<long> exps(std::initializer_list<long> parts) { return {parts}; }

// The standing example point family used across suites.
inline qtoda::ParamPoint point2(long bound = 6) {
    return qtoda::ParamPoint::make(rat("3/7"), rats({"2", "5"}), bound);
}
inline qtoda::ParamPoint point3(long bound = 6) {
    return qtoda::ParamPoint::make(rat("3/7"), rats({"2", "5", "11"}), bound);
}
inline qtoda::ParamPoint point4(long bound = 6) {
    return qtoda::ParamPoint::make(rat("3/7"), rats({"2", "5", "11", "13"}), bound);
}

} // namespace th
