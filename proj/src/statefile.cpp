#include "sepcrit/statefile.hpp"

#include <fstream>

#include <json.hpp>

namespace sepcrit {

using nlohmann::json;

void write_state_file(const std::string& path, const DensityMatrix& rho) {
    json j;
    j["dims"] = {rho.dims().d_A, rho.dims().d_B};
    json rows = json::array();
    const ComplexMatrix& m = rho.matrix();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long k = 0; k < m.cols(); ++k)
            row.push_back({m(i, k).real(), m(i, k).imag()});
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);

    std::ofstream out(path);
    if (!out)
        throw Error("cannot open '" + path + "' for writing");
    out << j.dump(1) << "\n";
}

std::pair<BipartiteDims, ComplexMatrix> read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "' for reading");
    json j;
    try {
        in >> j;
        BipartiteDims dims{j.at("dims").at(0).get<int>(),
                           j.at("dims").at(1).get<int>()};
        const auto& rows = j.at("matrix");
        const long n = static_cast<long>(rows.size());
        ComplexMatrix m(n, n);
        for (long i = 0; i < n; ++i) {
            const auto& row = rows.at(i);
            if (static_cast<long>(row.size()) != n)
                throw Error("matrix in '" + path + "' is not square");
            for (long k = 0; k < n; ++k)
                m(i, k) = Complex(row.at(k).at(0).get<double>(),
                                  row.at(k).at(1).get<double>());
        }
        return {dims, std::move(m)};
    } catch (const json::exception& e) {
        throw Error("malformed state file '" + path + "': " + e.what());
    }
}

} // namespace sepcrit
