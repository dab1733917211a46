#include "qsw/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsw/threading.hpp"

namespace qsw {

std::size_t default_thread_count() {
    if (const char* env = std::getenv("QSW_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<std::size_t>(v);
    }
    return 1;
}

}  // namespace qsw

namespace qsw::io {

namespace {

constexpr char kMagic[4] = {'Q', 'S', 'W', '1'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ostream& os, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(os, bits);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& is) {
    std::uint64_t bits = get_u64(is);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

struct Dim {
    std::uint64_t count;
    double start;
    double step;
};

void write_header(std::ostream& os, std::uint32_t rank, const std::vector<Dim>& dims) {
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u32(os, rank);
    for (const Dim& d : dims) {
        put_u64(os, d.count);
        put_f64(os, d.start);
        put_f64(os, d.step);
    }
}

void write_samples(std::ostream& os, const std::vector<Quaternion>& samples) {
    for (const Quaternion& q : samples) {
        put_f64(os, q.r);
        put_f64(os, q.i);
        put_f64(os, q.j);
        put_f64(os, q.k);
    }
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
    std::ofstream os(path, mode);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode) {
    std::ifstream is(path, mode);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

}  // namespace

void write_qsw1(const std::string& path, const QField& f) {
    std::ofstream os = open_out(path, std::ios::binary);
    write_header(os, 2, {{f.ax.count, f.ax.start, f.ax.step},
                         {f.ay.count, f.ay.start, f.ay.step}});
    write_samples(os, f.samples);
    if (!os) throw std::runtime_error("write failed: " + path);
}

void write_qsw1(const std::string& path, const StockwellField& S) {
    if (S.n1() < 1 || S.n2() < 1) throw std::invalid_argument("write_qsw1: empty volume");
    // the container encodes dimensions as {count, start, step}; a volume
    // with non-uniform xi spacing cannot round-trip through it
    for (std::size_t k = 1; k < S.n1(); ++k)
        if (std::abs(S.xi.xi1s[k] - S.xi.xi1s[k - 1] - S.xi.step1) > 1e-9 * S.xi.step1)
            throw std::invalid_argument("write_qsw1: non-uniform xi1 grid");
    for (std::size_t k = 1; k < S.n2(); ++k)
        if (std::abs(S.xi.xi2s[k] - S.xi.xi2s[k - 1] - S.xi.step2) > 1e-9 * S.xi.step2)
            throw std::invalid_argument("write_qsw1: non-uniform xi2 grid");
    std::ofstream os = open_out(path, std::ios::binary);
    write_header(os, 4, {{S.n1(), S.xi.xi1s.front(), S.xi.step1},
                         {S.n2(), S.xi.xi2s.front(), S.xi.step2},
                         {S.bx.count, S.bx.start, S.bx.step},
                         {S.by.count, S.by.start, S.by.step}});
    write_samples(os, S.coeffs);
    if (!os) throw std::runtime_error("write failed: " + path);
}

LoadedObject read_qsw1(const std::string& path) {
    std::ifstream is = open_in(path, std::ios::binary);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("not a QSW1 file: " + path);
    std::uint32_t version = get_u32(is);
    if (version != kVersion) throw std::runtime_error("unsupported QSW1 version");
    std::uint32_t rank = get_u32(is);
    if (rank != 2 && rank != 4) throw std::runtime_error("unsupported QSW1 rank");
    std::vector<Dim> dims(rank);
    for (Dim& d : dims) {
        d.count = get_u64(is);
        d.start = get_f64(is);
        d.step = get_f64(is);
        if (d.count == 0 || !(d.step > 0.0)) throw std::runtime_error("bad QSW1 dimension");
    }
    std::size_t total = 1;
    for (const Dim& d : dims) total *= static_cast<std::size_t>(d.count);
    std::vector<Quaternion> samples(total);
    for (Quaternion& q : samples) {
        q.r = get_f64(is);
        q.i = get_f64(is);
        q.j = get_f64(is);
        q.k = get_f64(is);
    }
    if (!is) throw std::runtime_error("truncated QSW1 file: " + path);

    LoadedObject obj;
    obj.rank = static_cast<int>(rank);
    if (rank == 2) {
        obj.field = QField(Axis{static_cast<std::size_t>(dims[0].count), dims[0].start, dims[0].step},
                           Axis{static_cast<std::size_t>(dims[1].count), dims[1].start, dims[1].step});
        obj.field.samples = std::move(samples);
    } else {
        StockwellField S;
        S.xi.step1 = dims[0].step;
        S.xi.step2 = dims[1].step;
        S.xi.xi1s.resize(dims[0].count);
        for (std::size_t k = 0; k < S.xi.xi1s.size(); ++k)
            S.xi.xi1s[k] = dims[0].start + static_cast<double>(k) * dims[0].step;
        S.xi.xi2s.resize(dims[1].count);
        for (std::size_t k = 0; k < S.xi.xi2s.size(); ++k)
            S.xi.xi2s[k] = dims[1].start + static_cast<double>(k) * dims[1].step;
        S.bx = Axis{static_cast<std::size_t>(dims[2].count), dims[2].start, dims[2].step};
        S.by = Axis{static_cast<std::size_t>(dims[3].count), dims[3].start, dims[3].step};
        S.coeffs = std::move(samples);
        obj.vol = std::move(S);
    }
    return obj;
}

namespace {

void csv_quad(std::ostream& os, const Quaternion& q) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g", q.r, q.i, q.j, q.k);
    os << buf;
}

}  // namespace

void write_csv(const std::string& path, const QField& f) {
    std::ofstream os = open_out(path, std::ios::out);
    os << "x1,x2,qr,qi,qj,qk\n";
    char buf[80];
    for (std::size_t m = 0; m < f.ax.count; ++m) {
        for (std::size_t n = 0; n < f.ay.count; ++n) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,", f.ax.point(m), f.ay.point(n));
            os << buf;
            csv_quad(os, f.at(m, n));
            os << "\n";
        }
    }
    if (!os) throw std::runtime_error("write failed: " + path);
}

void write_csv(const std::string& path, const StockwellField& S) {
    std::ofstream os = open_out(path, std::ios::out);
    os << "xi1,xi2,b1,b2,qr,qi,qj,qk\n";
    char buf[160];
    for (std::size_t i1 = 0; i1 < S.n1(); ++i1)
        for (std::size_t i2 = 0; i2 < S.n2(); ++i2)
            for (std::size_t p = 0; p < S.bx.count; ++p)
                for (std::size_t q = 0; q < S.by.count; ++q) {
                    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,",
                                  S.xi.xi1s[i1], S.xi.xi2s[i2], S.bx.point(p), S.by.point(q));
                    os << buf;
                    csv_quad(os, S.at(i1, i2, p, q));
                    os << "\n";
                }
    if (!os) throw std::runtime_error("write failed: " + path);
}

QField read_csv_field(const std::string& path) {
    std::ifstream is = open_in(path, std::ios::in);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty CSV: " + path);
    struct Row {
        double x1, x2;
        Quaternion q;
    };
    std::vector<Row> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Row r;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &r.x1, &r.x2, &r.q.r,
                        &r.q.i, &r.q.j, &r.q.k) != 6)
            throw std::runtime_error("bad CSV row: " + line);
        rows.push_back(r);
    }
    if (rows.size() < 4) throw std::runtime_error("CSV too small: " + path);
    // infer grid: rows are (x1 slow, x2 fast)
    std::size_t n2 = 1;
    while (n2 < rows.size() && rows[n2].x1 == rows[0].x1) ++n2;
    if (rows.size() % n2 != 0) throw std::runtime_error("ragged CSV grid: " + path);
    std::size_t n1 = rows.size() / n2;
    Axis ax{n1, rows[0].x1, n1 > 1 ? rows[n2].x1 - rows[0].x1 : 1.0};
    Axis ay{n2, rows[0].x2, n2 > 1 ? rows[1].x2 - rows[0].x2 : 1.0};
    QField f(ax, ay);
    for (std::size_t i = 0; i < rows.size(); ++i) f.samples[i] = rows[i].q;
    return f;
}

void write_pgm16(const std::string& path, const std::vector<double>& values,
                 std::size_t rows, std::size_t cols) {
    if (values.size() != rows * cols) throw std::invalid_argument("write_pgm16: shape mismatch");
    double lo = values.empty() ? 0.0 : values[0], hi = lo;
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double span = hi > lo ? hi - lo : 1.0;
    std::ofstream os = open_out(path, std::ios::binary);
    os << "P5\n" << cols << " " << rows << "\n65535\n";
    for (double v : values) {
        auto px = static_cast<std::uint16_t>(std::lround((v - lo) / span * 65535.0));
        unsigned char b[2] = {static_cast<unsigned char>(px >> 8),
                              static_cast<unsigned char>(px & 0xff)};
        os.write(reinterpret_cast<const char*>(b), 2);
    }
    if (!os) throw std::runtime_error("write failed: " + path);
    std::ofstream side = open_out(path + ".range", std::ios::out);
    char buf[80];
    std::snprintf(buf, sizeof(buf), "min = %.17g\nmax = %.17g\n", lo, hi);
    side << buf;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream is = open_in(path, std::ios::in);
    std::map<std::string, std::string> kv;
    std::string line;
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r\n");
        std::size_t b = s.find_last_not_of(" \t\r\n");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

QField read_ppm_as_field(const std::string& path, Axis ax, Axis ay) {
    std::ifstream is = open_in(path, std::ios::binary);
    std::string magic;
    is >> magic;
    if (magic != "P6") throw std::runtime_error("expected binary PPM (P6): " + path);
    auto next_token = [&is]() {
        std::string tok;
        for (;;) {
            is >> tok;
            if (!is) throw std::runtime_error("truncated PPM header");
            if (tok[0] == '#') {
                std::string rest;
                std::getline(is, rest);
                continue;
            }
            return tok;
        }
    };
    std::size_t w = std::stoul(next_token());
    std::size_t h = std::stoul(next_token());
    std::size_t maxval = std::stoul(next_token());
    if (maxval != 255) throw std::runtime_error("only 8-bit PPM supported");
    is.get();  // single whitespace after header
    std::vector<unsigned char> raw(w * h * 3);
    is.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!is) throw std::runtime_error("truncated PPM data: " + path);
    if (ax.count != h || ay.count != w)
        throw std::invalid_argument("read_ppm_as_field: axis shape must match raster");
    QField f(ax, ay);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) {
            const unsigned char* px = &raw[(r * w + c) * 3];
            f.at(r, c) = Quaternion{0.0, px[0] / 255.0, px[1] / 255.0, px[2] / 255.0};
        }
    return f;
}

}  // namespace qsw::io
