#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qmf/qseries.hpp"

namespace qmf {

// Coefficient cache file, little-endian throughout:
//   magic "QSER1"
//   u8  ring tag (1 = mod m; exact series are not cacheable)
//   u16 modulus
//   i32 offset24
//   u64 coefficient count
//   count bytes of residues
// Writes go to a temp file in the same directory and are renamed into place,
// so readers never observe a partial file.
void write_qser(const std::filesystem::path& path, const QSeries& s);
QSeries read_qser(const std::filesystem::path& path);

// Disk-backed store for expensive mod-m expansions. A cached file longer than
// the request is truncated on load; recomputation never changes prefixes, so
// cold and warm runs agree coefficient for coefficient.
class CoeffCache {
public:
    explicit CoeffCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
    CoeffCache() = default;  // disabled cache

    bool enabled() const { return !dir_.empty(); }

    // Overpartition numbers mod m to n_terms coefficients.
    QSeries overpartitions(unsigned m, std::int64_t n_terms);

private:
    std::filesystem::path dir_;
};

}  // namespace qmf
