#include "hanoi/cache.hpp"

#include <unistd.h>

#include <array>
#include <cstring>
#include <fstream>

namespace hanoi {

namespace {

constexpr char kMagic[4] = {'H', 'G', 'D', 'M'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kPayloadBytes = 16;

enum MaskKind : std::uint8_t {
  kMaskNone = 0,
  kMaskFrozenSuffix = 1,
  kMaskFixedPrefix = 2,
  kMaskBannedLetters = 3,
};

struct EncodedMask {
  std::uint8_t kind = kMaskNone;
  std::array<std::uint8_t, kPayloadBytes> payload = {};
};

EncodedMask encode_mask(const SubgraphMask& mask) {
  int components = 0;
  if (mask.frozen_suffix) ++components;
  if (mask.fixed_prefix) ++components;
  if (!mask.banned_letters.empty()) ++components;
  if (components > 1)
    throw IoError("combined subgraph masks are not persistable");

  EncodedMask out;
  if (mask.frozen_suffix) {
    out.kind = kMaskFrozenSuffix;
    out.payload[0] = static_cast<std::uint8_t>(mask.frozen_suffix->count);
    out.payload[1] = static_cast<std::uint8_t>(mask.frozen_suffix->peg);
  } else if (mask.fixed_prefix) {
    const std::string& w = *mask.fixed_prefix;
    if (w.size() > kPayloadBytes - 1)
      throw IoError("fixed prefix longer than 15 letters is not persistable");
    out.kind = kMaskFixedPrefix;
    out.payload[0] = static_cast<std::uint8_t>(w.size());
    for (std::size_t j = 0; j < w.size(); ++j)
      out.payload[j + 1] = static_cast<std::uint8_t>(w[j] - 'A');
  } else if (!mask.banned_letters.empty()) {
    out.kind = kMaskBannedLetters;
    out.payload[0] = mask.banned_letters.bits();
  }
  return out;
}

SubgraphMask decode_mask(std::uint8_t kind,
                         const std::array<std::uint8_t, kPayloadBytes>& payload,
                         int pegs) {
  SubgraphMask mask;
  switch (kind) {
    case kMaskNone:
      break;
    case kMaskFrozenSuffix:
      mask.frozen_suffix = FrozenSuffix{payload[0], payload[1]};
      break;
    case kMaskFixedPrefix: {
      const std::size_t len = payload[0];
      if (len == 0 || len > kPayloadBytes - 1)
        throw IoError("corrupt fixed-prefix payload");
      std::string w(len, 'A');
      for (std::size_t j = 0; j < len; ++j) {
        if (payload[j + 1] >= static_cast<std::uint8_t>(pegs))
          throw IoError("corrupt fixed-prefix payload");
        w[j] = peg_letter(payload[j + 1]);
      }
      mask.fixed_prefix = std::move(w);
      break;
    }
    case kMaskBannedLetters:
      mask.banned_letters = LetterSet::from_bits(payload[0]);
      break;
    default:
      throw IoError("unknown mask kind " + std::to_string(kind));
  }
  return mask;
}

void put_u64_le(std::uint8_t* out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out[b] = static_cast<std::uint8_t>(v >> (8 * b));
}

std::uint64_t get_u64_le(const std::uint8_t* in) {
  std::uint64_t v = 0;
  for (int b = 7; b >= 0; --b) v = (v << 8) | in[b];
  return v;
}

}  // namespace

std::size_t save_distance_map(const DistanceMap& dmap,
                              const std::filesystem::path& path) {
  const EncodedMask mask = encode_mask(dmap.mask());
  std::array<std::uint8_t, kDistanceMapHeaderSize> header = {};
  std::memcpy(header.data(), kMagic, 4);
  header[4] = kVersion;
  header[5] = static_cast<std::uint8_t>(dmap.shape().pegs());
  header[6] = static_cast<std::uint8_t>(dmap.shape().disks());
  header[7] = mask.kind;
  std::memcpy(header.data() + 8, mask.payload.data(), kPayloadBytes);
  put_u64_le(header.data() + 24, dmap.source().code());

  const std::filesystem::path tmp =
      path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(reinterpret_cast<const char*>(header.data()),
              static_cast<std::streamsize>(header.size()));
    out.write(reinterpret_cast<const char*>(dmap.distances().data()),
              static_cast<std::streamsize>(dmap.distances().size()));
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename to " + path.string() + ": " + ec.message());
  return kDistanceMapHeaderSize + dmap.distances().size();
}

DistanceMap load_distance_map(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::array<std::uint8_t, kDistanceMapHeaderSize> header = {};
  in.read(reinterpret_cast<char*>(header.data()),
          static_cast<std::streamsize>(header.size()));
  if (in.gcount() < 4 || std::memcmp(header.data(), kMagic, 4) != 0)
    throw BadMagic("not a distance-map file: " + path.string());
  if (static_cast<std::size_t>(in.gcount()) != header.size())
    throw TruncatedFile("truncated header in " + path.string());
  if (header[4] != kVersion)
    throw VersionMismatch("distance-map version " + std::to_string(header[4]) +
                          ", expected " + std::to_string(kVersion));

  PuzzleShape shape = [&] {
    try {
      return PuzzleShape(header[5], header[6]);
    } catch (const std::invalid_argument& e) {
      throw IoError(std::string("corrupt shape header: ") + e.what());
    }
  }();
  std::array<std::uint8_t, kPayloadBytes> payload = {};
  std::memcpy(payload.data(), header.data() + 8, kPayloadBytes);
  const SubgraphMask mask = decode_mask(header[7], payload, shape.pegs());
  const std::uint64_t source_code = get_u64_le(header.data() + 24);
  if (source_code >= shape.state_count())
    throw IoError("source code out of range in " + path.string());

  std::vector<std::uint8_t> dist(shape.state_count());
  in.read(reinterpret_cast<char*>(dist.data()),
          static_cast<std::streamsize>(dist.size()));
  if (static_cast<std::size_t>(in.gcount()) != dist.size())
    throw TruncatedFile("truncated payload in " + path.string());
  if (in.peek() != std::ifstream::traits_type::eof())
    throw IoError("trailing bytes in " + path.string());

  try {
    return DistanceMap(shape, mask, State(shape, source_code),
                       std::move(dist));
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("inconsistent distance map: ") + e.what());
  }
}

}  // namespace hanoi
