#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace arbordom {

// Message payload: a sequence of bits with an exact length. The simulator
// charges messages by bit_length(), so programs build payloads through the
// append helpers instead of padding to whole bytes.
class BitString {
 public:
  BitString() = default;

  void append_bit(bool bit) {
    const int byte = nbits_ / 8;
    if (byte == static_cast<int>(bytes_.size())) bytes_.push_back(0);
    if (bit) bytes_[byte] = static_cast<std::uint8_t>(bytes_[byte] | (1u << (nbits_ % 8)));
    ++nbits_;
  }

  // Appends `width` bits of `value`, least-significant bit first.
  void append_field(std::uint64_t value, int width) {
    if (width < 0 || width > 64) fail(Errc::invalid_argument, "field width out of range");
    for (int i = 0; i < width; ++i) append_bit((value >> i) & 1u);
  }

  int bit_length() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool bit(int i) const { return (bytes_[i / 8] >> (i % 8)) & 1u; }

  bool operator==(const BitString&) const = default;

  class Reader {
   public:
    explicit Reader(const BitString& bits) : bits_(&bits) {}

    bool read_bit() {
      if (pos_ >= bits_->bit_length()) fail(Errc::invalid_argument, "read past end of message");
      return bits_->bit(pos_++);
    }

    std::uint64_t read_field(int width) {
      std::uint64_t value = 0;
      for (int i = 0; i < width; ++i) {
        if (read_bit()) value |= (std::uint64_t{1} << i);
      }
      return value;
    }

    int remaining() const { return bits_->bit_length() - pos_; }

   private:
    const BitString* bits_;
    int pos_ = 0;
  };

 private:
  std::vector<std::uint8_t> bytes_;
  int nbits_ = 0;
};

inline BitString one_bit(bool value) {
  BitString b;
  b.append_bit(value);
  return b;
}

}  // namespace arbordom
