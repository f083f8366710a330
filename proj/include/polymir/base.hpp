#ifndef POLYMIR_BASE_HPP
#define POLYMIR_BASE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polymir {

/// Error raised on malformed input data (unknown ids, broken invariants).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised when a construction would exceed a configured size cap.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Size caps guarding combinatorial blow-up.  Constructions check these
/// before allocating.  The CLI maps --max-cells / --max-group-order here.
struct limits {
    static std::size_t& max_simplices() {
        static std::size_t v = std::size_t(1) << 20;
        return v;
    }
    static std::size_t& max_cells() {
        static std::size_t v = 2'000'000;
        return v;
    }
    static std::size_t& max_group_order() {
        static std::size_t v = 100'000;
        return v;
    }
};

} // namespace polymir

#endif
