#include "minneg/matrix_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace minneg {

namespace {

using json = nlohmann::ordered_json;

// Extracts a 4x4 grid of finite numbers from j[key].
std::array<std::array<double, 4>, 4> read_grid(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    const json& g = j.at(key);
    if (!g.is_array() || g.size() != 4)
        throw ParseError(std::string("\"") + key + "\" must be an array of 4 rows");
    std::array<std::array<double, 4>, 4> out{};
    for (std::size_t r = 0; r < 4; ++r) {
        const json& row = g.at(r);
        if (!row.is_array() || row.size() != 4)
            throw ParseError(std::string("\"") + key + "\" row " + std::to_string(r) +
                             " must hold 4 numbers");
        for (std::size_t c = 0; c < 4; ++c) {
            const json& v = row.at(c);
            if (!v.is_number())
                throw ParseError(std::string("\"") + key + "\" entry (" +
                                 std::to_string(r) + "," + std::to_string(c) +
                                 ") is not a number");
            out[r][c] = v.get<double>();
        }
    }
    return out;
}

}  // namespace

MatrixFile MatrixFile::load(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid matrix file: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("matrix file must be a JSON object");
    if (!j.contains("dim") || !j.at("dim").is_number_integer() ||
        j.at("dim").get<int>() != 4)
        throw ParseError("matrix file must declare \"dim\": 4");

    const auto re = read_grid(j, "re");
    const auto im = read_grid(j, "im");

    MatrixFile f;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            f.matrix(r, c) = Complex(re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                                     im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    if (!f.matrix.is_finite()) throw ParseError("matrix file holds a non-finite entry");
    return f;
}

MatrixFile MatrixFile::load_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\" for reading");
    return load(in);
}

std::string MatrixFile::to_string() const {
    json re = json::array();
    json im = json::array();
    for (int r = 0; r < 4; ++r) {
        json re_row = json::array();
        json im_row = json::array();
        for (int c = 0; c < 4; ++c) {
            re_row.push_back(matrix(r, c).real());
            im_row.push_back(matrix(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    json j;
    j["dim"] = 4;
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j.dump(2) + "\n";
}

void MatrixFile::save(std::ostream& out) const { out << to_string(); }

void MatrixFile::save_path(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
    save(out);
    out.flush();
    if (!out) throw ParseError("failed writing \"" + path + "\"");
}

}  // namespace minneg
