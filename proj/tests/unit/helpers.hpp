#pragma once

#include <string>
#include <vector>

#include "leibniz/leibniz.hpp"

namespace leibniz::test {

inline Matrix<QI> qmat(const std::vector<std::vector<int>>& rows) {
    Matrix<QI> m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = QI(rows[i][j]);
    return m;
}

inline std::string data_path(const std::string& rel) { return std::string(LEIBNIZ_DATA_DIR) + "/" + rel; }

inline StructureConstants sample(const std::string& name) { return load_algebra(data_path("samples/" + name)); }

inline std::vector<StructureConstants> fixtures(std::size_t dim) {
    return parse_algebra_list(read_file(data_path("fixtures/dim" + std::to_string(dim) + ".json")));
}

inline CanonicalBlock blk(const std::string& name) { return parse_block(name); }

} // namespace leibniz::test
