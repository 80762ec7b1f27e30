#include "qmf/cache.hpp"

#include <cstring>
#include <fstream>

namespace qmf {

namespace {

constexpr char kMagic[5] = {'Q', 'S', 'E', 'R', '1'};

void put_u16(std::ostream& os, std::uint16_t v) {
    char b[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
    os.write(b, 2);
}

void put_i32(std::ostream& os, std::int32_t v) {
    auto u = static_cast<std::uint32_t>(v);
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((u >> (8 * i)) & 0xff);
    os.write(b, 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 8);
}

std::uint16_t get_u16(std::istream& is) {
    unsigned char b[2];
    is.read(reinterpret_cast<char*>(b), 2);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::int32_t get_i32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t u = 0;
    for (int i = 0; i < 4; ++i) u |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return static_cast<std::int32_t>(u);
}

std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return u;
}

}  // namespace

void write_qser(const std::filesystem::path& path, const QSeries& s) {
    if (s.ring().is_exact())
        throw std::invalid_argument("write_qser: exact series are not cacheable");
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("write_qser: cannot open " + tmp.string());
        os.write(kMagic, sizeof(kMagic));
        os.put(1);
        put_u16(os, static_cast<std::uint16_t>(s.ring().modulus()));
        put_i32(os, static_cast<std::int32_t>(s.offset24()));
        const auto& data = s.mod_data();
        put_u64(os, data.size());
        os.write(reinterpret_cast<const char*>(data.data()),
                 static_cast<std::streamsize>(data.size()));
        if (!os) throw std::runtime_error("write_qser: write failed on " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

QSeries read_qser(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_qser: cannot open " + path.string());
    char magic[5];
    is.read(magic, 5);
    if (!is || std::memcmp(magic, kMagic, 5) != 0)
        throw std::runtime_error("read_qser: bad magic in " + path.string());
    int tag = is.get();
    if (tag != 1) throw std::runtime_error("read_qser: unsupported ring tag");
    unsigned m = get_u16(is);
    std::int32_t off = get_i32(is);
    std::uint64_t count = get_u64(is);
    QSeries::ModVec data(count);
    is.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(count));
    if (!is || static_cast<std::uint64_t>(is.gcount()) != count)
        throw std::runtime_error("read_qser: truncated file " + path.string());
    return QSeries(Ring::mod(m), off, std::move(data));
}

QSeries CoeffCache::overpartitions(unsigned m, std::int64_t n_terms) {
    if (!enabled()) return overpartition_series(n_terms, Ring::mod(m));

    std::filesystem::create_directories(dir_);
    std::filesystem::path file = dir_ / ("pbar_mod" + std::to_string(m) + ".qser");
    if (std::filesystem::exists(file)) {
        QSeries cached = read_qser(file);
        if (cached.length() >= n_terms) {
            QSeries::ModVec prefix(cached.mod_data().begin(),
                                   cached.mod_data().begin() + n_terms);
            return QSeries(cached.ring(), cached.offset24(), std::move(prefix));
        }
    }
    QSeries fresh = overpartition_series(n_terms, Ring::mod(m));
    write_qser(file, fresh);
    return fresh;
}

}  // namespace qmf
