#include "derange/cache.hpp"

#include <cstdint>
#include <fstream>
#include <vector>

namespace derange {

namespace {

constexpr char kMagic[4] = {'D', 'R', 'G', 'T'};
constexpr std::uint32_t kVersion = 1;

std::uint64_t fnv1a(const std::vector<std::uint8_t>& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t b : data) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

struct Writer {
    std::vector<std::uint8_t> bytes;
    void u8(std::uint8_t v) { bytes.push_back(v); }
    void u16(std::uint16_t v) {
        bytes.push_back(v & 0xff);
        bytes.push_back(v >> 8);
    }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes.push_back((v >> (8 * i)) & 0xff);
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) bytes.push_back((v >> (8 * i)) & 0xff);
    }
};

struct Reader {
    const std::vector<std::uint8_t>& bytes;
    std::size_t pos = 0;
    bool fail = false;
    std::uint8_t u8() { return pos < bytes.size() ? bytes[pos++] : (fail = true, 0); }
    std::uint16_t u16() {
        std::uint16_t a = u8(), b = u8();
        return a | (b << 8);
    }
    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
        return v;
    }
};

}  // namespace

std::string GroupCache::file_name(const GaloisField& field) {
    std::string mod;
    for (int c : field.modulus()) mod += std::to_string(c);
    return "pgl2_p" + std::to_string(field.p()) + "_k" + std::to_string(field.k()) + "_m" + mod + ".tbl";
}

std::unique_ptr<PglGroup> GroupCache::load(const GaloisField& field, const std::string& dir,
                                           std::string* note) {
    std::string path = dir + "/" + file_name(field);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        if (note) *note = "cache miss: " + path;
        return nullptr;
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() < 16) {
        if (note) *note = "cache corrupt (truncated): " + path;
        return nullptr;
    }
    std::vector<std::uint8_t> payload(bytes.begin(), bytes.end() - 8);
    Reader tail{bytes, bytes.size() - 8};
    if (fnv1a(payload) != tail.u64()) {
        if (note) *note = "cache corrupt (checksum mismatch): " + path;
        return nullptr;
    }

    Reader r{payload};
    for (char m : kMagic)
        if (r.u8() != static_cast<std::uint8_t>(m)) {
            if (note) *note = "cache corrupt (bad magic): " + path;
            return nullptr;
        }
    if (r.u32() != kVersion || r.u32() != static_cast<std::uint32_t>(field.p()) ||
        r.u32() != static_cast<std::uint32_t>(field.k())) {
        if (note) *note = "cache mismatch (version or field): " + path;
        return nullptr;
    }
    for (int c : field.modulus())
        if (r.u32() != static_cast<std::uint32_t>(c)) {
            if (note) *note = "cache mismatch (modulus): " + path;
            return nullptr;
        }

    const std::uint32_t n = r.u32();
    const int degree = field.q() + 1;
    std::vector<GroupElement> elements(n);
    std::vector<Perm> perms(n, Perm(degree));
    std::vector<int> inverse(n);
    std::vector<ClassLabel> labels(n);
    std::vector<std::uint8_t> psl(n);
    for (std::uint32_t i = 0; i < n && !r.fail; ++i) {
        elements[i] = {r.u16(), r.u16(), r.u16(), r.u16()};
        for (int p = 0; p < degree; ++p) perms[i][p] = r.u16();
        inverse[i] = static_cast<int>(r.u32());
        labels[i].kind = static_cast<ClassKind>(r.u8());
        labels[i].exp = r.u16();
        psl[i] = r.u8();
    }
    if (r.fail || r.pos != payload.size()) {
        if (note) *note = "cache corrupt (size mismatch): " + path;
        return nullptr;
    }
    try {
        auto group = std::unique_ptr<PglGroup>(new PglGroup(field, std::move(elements), std::move(perms),
                                                            std::move(inverse), std::move(labels),
                                                            std::move(psl)));
        if (note) *note = "cache hit: " + path;
        return group;
    } catch (const std::exception& e) {
        if (note) *note = std::string("cache rejected: ") + e.what();
        return nullptr;
    }
}

bool GroupCache::store(const PglGroup& group, const std::string& dir, std::string* note) {
    const auto& field = group.field();
    Writer w;
    for (char m : kMagic) w.u8(static_cast<std::uint8_t>(m));
    w.u32(kVersion);
    w.u32(field.p());
    w.u32(field.k());
    for (int c : field.modulus()) w.u32(static_cast<std::uint32_t>(c));
    w.u32(static_cast<std::uint32_t>(group.size()));
    for (int i = 0; i < group.size(); ++i) {
        const auto& g = group.element(i);
        w.u16(static_cast<std::uint16_t>(g.a));
        w.u16(static_cast<std::uint16_t>(g.b));
        w.u16(static_cast<std::uint16_t>(g.c));
        w.u16(static_cast<std::uint16_t>(g.d));
        for (int p = 0; p < group.n_points(); ++p) w.u16(static_cast<std::uint16_t>(group.perm(i)[p]));
        w.u32(static_cast<std::uint32_t>(group.inverse(i)));
        const auto& label = group.classify(i);
        w.u8(static_cast<std::uint8_t>(label.kind));
        w.u16(static_cast<std::uint16_t>(label.exp));
        w.u8(group.psl_member(i) ? 1 : 0);
    }
    std::uint64_t checksum = fnv1a(w.bytes);
    w.u64(checksum);

    std::string path = dir + "/" + file_name(field);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        if (note) *note = "cache not writable: " + path;
        return false;
    }
    out.write(reinterpret_cast<const char*>(w.bytes.data()), static_cast<std::streamsize>(w.bytes.size()));
    if (note) *note = "cache stored: " + path;
    return out.good();
}

}  // namespace derange
