#pragma once

#include <iosfwd>
#include <string>

#include "minneg/mat.hpp"

namespace minneg {

/// On-disk matrix format: a JSON object with keys "dim" (always 4), "re" and
/// "im" (4x4 grids of finite decimals). Serialization uses shortest
/// round-trip number rendering, so writing is deterministic and lossless.
struct MatrixFile {
    Mat4 matrix;

    static MatrixFile load(std::istream& in);
    static MatrixFile load_path(const std::string& path);

    void save(std::ostream& out) const;
    void save_path(const std::string& path) const;

    std::string to_string() const;
};

}  // namespace minneg
