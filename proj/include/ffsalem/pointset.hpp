#pragma once

#include <cstdint>
#include <vector>

#include "ffsalem/errors.hpp"
#include "ffsalem/space.hpp"

namespace ffsalem {

// A subset E of F_p^d as a dense membership bitmap with cached cardinality.
class PointSet {
  public:
    explicit PointSet(SpaceParams space)
        : space_(space), membership_(space.n, 0), cardinality_(0) {}

    const SpaceParams& space() const { return space_; }
    std::uint64_t cardinality() const { return cardinality_; }

    bool contains(std::uint64_t index) const {
        if (index >= space_.n) throw input_error("point index out of range");
        return membership_[index] != 0;
    }

    void set(std::uint64_t index, bool member) {
        if (index >= space_.n) throw input_error("point index out of range");
        if (membership_[index] != static_cast<std::uint8_t>(member)) {
            membership_[index] = static_cast<std::uint8_t>(member);
            cardinality_ += member ? 1 : -1;
        }
    }

    const std::vector<std::uint8_t>& membership() const { return membership_; }

    std::vector<std::uint64_t> indices() const {
        std::vector<std::uint64_t> out;
        out.reserve(cardinality_);
        for (std::uint64_t i = 0; i < space_.n; ++i)
            if (membership_[i]) out.push_back(i);
        return out;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

  private:
    SpaceParams space_;
    std::vector<std::uint8_t> membership_;
    std::uint64_t cardinality_;
};

}  // namespace ffsalem
