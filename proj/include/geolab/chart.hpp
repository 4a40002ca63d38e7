#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geolab/errors.hpp"

namespace geolab {

// A chart is an ordered list of coordinate names. Every chart-local object
// (scalar, form, multivector, section, sub-bundle) carries a pointer to its
// chart; mixing objects over different charts raises ChartMismatch.
class Chart {
public:
    explicit Chart(std::vector<std::string> coords) : coords_(std::move(coords)) {
        if (coords_.empty())
            throw BadInput("chart needs at least one coordinate");
        for (std::size_t a = 0; a < coords_.size(); ++a) {
            if (coords_[a].empty())
                throw BadInput("empty coordinate name");
            for (std::size_t b = a + 1; b < coords_.size(); ++b)
                if (coords_[a] == coords_[b])
                    throw BadInput("duplicate coordinate name '" + coords_[a] + "'");
        }
    }

    int dim() const { return static_cast<int>(coords_.size()); }

    const std::string& coord(int i) const { return coords_.at(static_cast<std::size_t>(i)); }

    const std::vector<std::string>& coords() const { return coords_; }

    std::optional<int> index(std::string_view name) const {
        for (std::size_t a = 0; a < coords_.size(); ++a)
            if (coords_[a] == name) return static_cast<int>(a);
        return std::nullopt;
    }

    int index_or_throw(std::string_view name) const {
        if (auto i = index(name)) return *i;
        throw UnknownCoordinate("unknown coordinate '" + std::string(name) + "'");
    }

    bool operator==(const Chart& o) const { return coords_ == o.coords_; }
    bool operator!=(const Chart& o) const { return !(*this == o); }

private:
    std::vector<std::string> coords_;
};

using ChartPtr = std::shared_ptr<const Chart>;

inline ChartPtr make_chart(std::vector<std::string> coords) {
    return std::make_shared<const Chart>(std::move(coords));
}

inline void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (!a || !b) throw InternalError("null chart");
    if (a.get() != b.get() && !(*a == *b))
        throw ChartMismatch("objects live on different charts");
}

} // namespace geolab
