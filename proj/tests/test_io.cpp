#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "qsw/io.hpp"
#include "qsw/verify.hpp"

using namespace qsw;

namespace {

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

bool samples_identical(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(Quaternion)) == 0;
}

}  // namespace

TEST_CASE("qsw1 field round trip is bit exact") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        QField f = random_field(16, 8.0, seed);
        std::string path = temp_path("roundtrip_field.qsw");
        io::write_qsw1(path, f);
        io::LoadedObject obj = io::read_qsw1(path);
        REQUIRE(obj.rank == 2);
        CHECK(obj.field.ax == f.ax);
        CHECK(obj.field.ay == f.ay);
        CHECK(samples_identical(obj.field.samples, f.samples));
        std::remove(path.c_str());
    }
}

TEST_CASE("qsw1 volume round trip is bit exact") {
    Axis ax = desk_axis(16);
    WindowSpec dog = make_admissible_dog_window(0.5, 2.0, ax, ax);
    QField f = random_field(16, 8.0, 9);
    StockwellField S = forward_fast(f, dog, half_offset_xi_grid(4, 2.0), ax, ax);
    std::string path = temp_path("roundtrip_vol.qsw");
    io::write_qsw1(path, S);
    io::LoadedObject obj = io::read_qsw1(path);
    REQUIRE(obj.rank == 4);
    CHECK(obj.vol.n1() == S.n1());
    CHECK(obj.vol.bx == S.bx);
    CHECK(samples_identical(obj.vol.coeffs, S.coeffs));
    for (std::size_t k = 0; k < S.n1(); ++k)
        CHECK(obj.vol.xi.xi1s[k] == doctest::Approx(S.xi.xi1s[k]).epsilon(1e-15));
    std::remove(path.c_str());
}

TEST_CASE("csv field round trip") {
    QField f = random_field(16, 8.0, 4);
    std::string path = temp_path("roundtrip_field.csv");
    io::write_csv(path, f);
    QField g = io::read_csv_field(path);
    REQUIRE(g.samples.size() == f.samples.size());
    CHECK(samples_identical(g.samples, f.samples));  // %.17g preserves doubles
    CHECK(g.ax.count == f.ax.count);
    CHECK(g.ax.step == doctest::Approx(f.ax.step).epsilon(1e-15));
    std::remove(path.c_str());
}

TEST_CASE("bad inputs are rejected") {
    CHECK_THROWS_AS(io::read_qsw1(temp_path("missing_file.qsw")), std::runtime_error);
    std::string path = temp_path("not_qsw.bin");
    {
        std::ofstream os(path, std::ios::binary);
        os << "NOPE-not-a-field";
    }
    CHECK_THROWS_AS(io::read_qsw1(path), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("pgm16 with sidecar") {
    std::vector<double> px(32 * 16);
    for (std::size_t i = 0; i < px.size(); ++i) px[i] = static_cast<double>(i % 7);
    std::string path = temp_path("energy.pgm");
    io::write_pgm16(path, px, 32, 16);
    std::ifstream is(path, std::ios::binary);
    std::string magic;
    is >> magic;
    CHECK(magic == "P5");
    std::size_t w, h, maxv;
    is >> w >> h >> maxv;
    CHECK(w == 16);
    CHECK(h == 32);
    CHECK(maxv == 65535);
    std::ifstream side(path + ".range");
    REQUIRE(side.good());
    std::string line;
    std::getline(side, line);
    CHECK(line.find("min = 0") != std::string::npos);
    std::remove(path.c_str());
    std::remove((path + ".range").c_str());
}

TEST_CASE("config parsing") {
    std::string path = temp_path("run.cfg");
    {
        std::ofstream os(path);
        os << "# comment\n";
        os << "n = 32\n";
        os << "xi_count=8   # trailing comment\n";
        os << "half_extent =   8.0\n";
        os << "n = 64\n";  // later keys win
    }
    auto kv = io::read_config(path);
    CHECK(kv.at("n") == "64");
    CHECK(kv.at("xi_count") == "8");
    RunConfig cfg = config_from_kv(kv);
    CHECK(cfg.n == 64);
    CHECK(cfg.xi_count == 8);
    std::remove(path.c_str());
}

TEST_CASE("ppm raster maps to the imaginary channels") {
    std::string path = temp_path("raster.ppm");
    {
        std::ofstream os(path, std::ios::binary);
        os << "P6\n4 4\n255\n";
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                unsigned char px[3] = {static_cast<unsigned char>(10 * r),
                                       static_cast<unsigned char>(10 * c),
                                       static_cast<unsigned char>(100)};
                os.write(reinterpret_cast<const char*>(px), 3);
            }
    }
    Axis ax = make_axis(4, -1.0, 0.5);
    QField f = io::read_ppm_as_field(path, ax, ax);
    CHECK(f.at(2, 1).r == 0.0);
    CHECK(f.at(2, 1).i == doctest::Approx(20.0 / 255.0));
    CHECK(f.at(2, 1).j == doctest::Approx(10.0 / 255.0));
    CHECK(f.at(2, 1).k == doctest::Approx(100.0 / 255.0));
    std::remove(path.c_str());
}

TEST_CASE("report rendering is stable") {
    std::vector<VerifyRecord> recs(1);
    recs[0].name = "sample";
    recs[0].criterion = 3;
    recs[0].lhs = 0.1234567890123456789;
    recs[0].rhs = 1.0;
    recs[0].margin = 0.5;
    recs[0].pass = true;
    std::string a = render_report(recs);
    std::string b = render_report(recs);
    CHECK(a == b);
    CHECK(a.find("criterion=3") != std::string::npos);
    CHECK(a.find("pass=1") != std::string::npos);
}

TEST_CASE("csv volume export carries the full index tuple") {
    Axis ax = desk_axis(16);
    WindowSpec dog = make_admissible_dog_window(0.5, 2.0, ax, ax);
    QField f = random_field(16, 8.0, 12);
    StockwellField S = forward_fast(f, dog, half_offset_xi_grid(4, 2.0), ax, ax);
    std::string path = temp_path("vol.csv");
    io::write_csv(path, S);
    std::ifstream is(path);
    std::string header;
    std::getline(is, header);
    CHECK(header == "xi1,xi2,b1,b2,qr,qi,qj,qk");
    std::size_t lines = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++lines;
    CHECK(lines == S.coeffs.size());
    std::remove(path.c_str());
}

TEST_CASE("qsw1 rejects non-uniform xi grids") {
    Axis ax = desk_axis(16);
    WindowSpec gu = make_gaussian_unit_window(0.75, ax, ax);
    QField f = random_field(16, 8.0, 77);
    XiGrid xi;
    xi.step1 = xi.step2 = 0.5;
    xi.xi1s = {-1.0, -0.5, 0.5, 1.0};  // gap across zero
    xi.xi2s = xi.xi1s;
    StockwellField S = forward_fast(f, gu, xi, ax, ax);
    CHECK_THROWS_AS(io::write_qsw1(temp_path("nonuniform.qsw"), S),
                    std::invalid_argument);
}
