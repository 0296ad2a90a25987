#pragma once

#include <catch_amalgamated.hpp>

#include "qgr/exact/ratfunc.hpp"

namespace Catch {
template <>
struct StringMaker<qgr::SparsePoly> {
    static std::string convert(const qgr::SparsePoly& p) { return p.to_string(); }
};
template <>
struct StringMaker<qgr::RatFunc> {
    static std::string convert(const qgr::RatFunc& p) { return p.to_string(); }
};
template <>
struct StringMaker<qgr::UniRatFunc> {
    static std::string convert(const qgr::UniRatFunc& p) { return p.to_string(); }
};
}  // namespace Catch
