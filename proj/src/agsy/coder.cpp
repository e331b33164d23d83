#include "agsy/coder.hpp"

#include <algorithm>

#include "agsy/error.hpp"

namespace agsy {
namespace {

// 64-bit range coder with explicit carry handling.  low holds 65 bits; the
// top byte leaves through a one-byte cache plus a run of 0xFF bytes that a
// carry can still flip (the classic cache/FF scheme).  Renormalization
// keeps range >= 2^56, so with totals <= 2^30 the per-symbol truncation
// loss is below 2^-26 bits.
constexpr uint64_t kRenormBound = 1ull << 56;
constexpr uint64_t kFlushGranule = 1ull << 24;

class RangeEncoder {
 public:
  explicit RangeEncoder(std::vector<uint8_t>& out) : out_(out) {}

  void encode(uint64_t cum, uint64_t freq, uint64_t total) {
    const uint64_t r = range_ / total;
    low_ += static_cast<unsigned __int128>(r) * cum;
    range_ = r * freq;
    while (range_ < kRenormBound) {
      shift_low();
      range_ <<= 8;
    }
  }

  // Pins a code point on a 2^24 boundary inside [low, low+range) and emits
  // its five significant bytes; everything below the boundary is zero, and
  // the decoder zero-pads reads past the end.
  void finish() {
    low_ = (low_ + (kFlushGranule - 1)) & ~static_cast<unsigned __int128>(kFlushGranule - 1);
    for (int i = 0; i < 6; ++i) shift_low();
  }

 private:
  void shift_low() {
    const uint64_t lo = static_cast<uint64_t>(low_);
    const uint32_t carry = static_cast<uint32_t>(low_ >> 64);
    if (carry != 0 || lo < 0xFF00000000000000ull) {
      out_.push_back(static_cast<uint8_t>(cache_ + carry));
      while (--pending_ > 0)
        out_.push_back(static_cast<uint8_t>(0xFFu + carry));
      cache_ = static_cast<uint8_t>(lo >> 56);
    }
    ++pending_;
    low_ = static_cast<unsigned __int128>(lo << 8);
  }

  std::vector<uint8_t>& out_;
  unsigned __int128 low_ = 0;
  uint64_t range_ = ~0ull;
  uint8_t cache_ = 0;       // first emitted byte is a dummy 0 the decoder skips
  uint64_t pending_ = 1;
};

class RangeDecoder {
 public:
  explicit RangeDecoder(std::span<const uint8_t> bytes) : bytes_(bytes) {
    next_byte();  // the encoder's dummy byte
    for (int i = 0; i < 8; ++i) code_ = (code_ << 8) | next_byte();
  }

  uint64_t decode_value(uint64_t total) {
    scale_ = range_ / total;
    const uint64_t value = code_ / scale_;
    if (value >= total) throw Error(Errc::format, "corrupt coded payload");
    return value;
  }

  void consume(uint64_t cum, uint64_t freq) {
    code_ -= scale_ * cum;
    range_ = scale_ * freq;
    while (range_ < kRenormBound) {
      code_ = (code_ << 8) | next_byte();
      range_ <<= 8;
    }
  }

 private:
  uint64_t next_byte() {
    if (pos_ < bytes_.size()) return bytes_[pos_++];
    // The flush suppresses trailing zeros; a well-formed stream never needs
    // more than a few phantom reads.
    if (++overread_ > 12) throw Error(Errc::format, "truncated coded payload");
    return 0;
  }

  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
  uint32_t overread_ = 0;
  uint64_t code_ = 0;
  uint64_t range_ = ~0ull;
  uint64_t scale_ = 1;
};

}  // namespace

CodingModel CodingModel::from_frequencies(const FrequencyTable& freqs) {
  if (freqs.total() > kMaxCodingTotal)
    throw Error(Errc::capacity, "token count exceeds the coder's 2^30 cap");
  CodingModel m;
  m.cum_.resize(freqs.size() + 1, 0);
  uint64_t running = 0;
  for (SymbolId id = 0; id < freqs.size(); ++id) {
    m.cum_[id] = running;
    running += freqs.at(id);
  }
  m.cum_[freqs.size()] = running;
  return m;
}

SymbolId CodingModel::find(uint64_t value) const {
  // First interval whose upper bound exceeds value; zero-width intervals
  // cannot match.
  auto it = std::upper_bound(cum_.begin() + 1, cum_.end(), value);
  return static_cast<SymbolId>(it - cum_.begin() - 1);
}

std::vector<uint8_t> encode(std::span<const SymbolId> tokens,
                            const CodingModel& model) {
  std::vector<uint8_t> out;
  if (tokens.empty()) return out;
  const uint64_t total = model.total();
  if (total == 0)
    throw Error(Errc::invalid_argument, "coding model has zero total");

  RangeEncoder rc(out);
  for (SymbolId id : tokens) {
    if (id >= model.symbol_count())
      throw Error(Errc::invalid_argument, "token not present in the model");
    const uint64_t f = model.freq(id);
    if (f == 0)
      throw Error(Errc::invalid_argument,
                  "token " + std::to_string(id) + " has zero model frequency");
    rc.encode(model.cum(id), f, total);
  }
  rc.finish();
  return out;
}

std::vector<SymbolId> decode(std::span<const uint8_t> bytes,
                             const CodingModel& model, uint64_t token_count) {
  std::vector<SymbolId> tokens;
  if (token_count == 0) {
    if (!bytes.empty())
      throw Error(Errc::format, "payload bytes for an empty stream");
    return tokens;
  }
  const uint64_t total = model.total();
  if (total == 0) throw Error(Errc::format, "coding model has zero total");

  tokens.reserve(token_count);
  std::vector<uint64_t> seen(model.symbol_count(), 0);
  RangeDecoder rc(bytes);
  for (uint64_t i = 0; i < token_count; ++i) {
    const uint64_t value = rc.decode_value(total);
    const SymbolId id = model.find(value);
    rc.consume(model.cum(id), model.freq(id));
    ++seen[id];
    tokens.push_back(id);
  }
  // The model is the exact frequency table; any mismatch means the payload
  // did not come from it.
  for (SymbolId id = 0; id < model.symbol_count(); ++id) {
    if (seen[id] != model.freq(id))
      throw Error(Errc::format, "decoded symbol counts disagree with the model");
  }
  return tokens;
}

}  // namespace agsy
