#pragma once

#include <array>
#include <string>

#include "chartex/image.hpp"

namespace chartex {

// Built-in 5x7 bitmap font covering the numeric label charset
// {0-9, '-', '.', 'e', '+'}. Glyphs scale by integer pixel replication;
// labels are drawn from these bitmaps and tick values are recognized
// against the same bitmaps by template matching.
class GlyphSet {
public:
    static constexpr int kCols = 5;
    static constexpr int kRows = 7;

    static const GlyphSet& builtin();

    bool has(char c) const;
    // Row bitmasks, bit 4 = leftmost column.
    const std::array<uint8_t, kRows>& rows(char c) const;
    std::string charset() const;

    // Binary mask (255 = ink) of one glyph cell at integer scale.
    Image glyph_tile(char c, int scale) const;

    // Leftmost/rightmost inked columns of the 5-wide cell.
    void ink_columns(char c, int& first, int& last) const;

private:
    GlyphSet();
    std::array<std::array<uint8_t, kRows>, 128> rows_{};
    std::array<bool, 128> present_{};
};

// Inter-character gap is one base column, so a label with n characters is
// (6n - 1) * scale wide and 7 * scale tall.
int text_tile_width(size_t n_chars, int scale);
int text_tile_height(int scale);

// Binary mask (255 = ink) of a whole label at integer scale.
Image render_text_tile(const std::string& text, int scale,
                       const GlyphSet& glyphs = GlyphSet::builtin());

}  // namespace chartex
