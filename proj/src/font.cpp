#include "chartex/font.hpp"

#include <algorithm>

#include "chartex/errors.hpp"

namespace chartex {

namespace {

struct GlyphDef {
    char c;
    std::array<uint8_t, 7> rows;
};

// 5-bit rows, bit 4 = leftmost column.
constexpr GlyphDef kGlyphs[] = {
    {'0', {0b01110, 0b10001, 0b10011, 0b10101, 0b11001, 0b10001, 0b01110}},
    {'1', {0b00100, 0b01100, 0b00100, 0b00100, 0b00100, 0b00100, 0b01110}},
    {'2', {0b01110, 0b10001, 0b00001, 0b00010, 0b00100, 0b01000, 0b11111}},
    {'3', {0b11111, 0b00010, 0b00100, 0b00010, 0b00001, 0b10001, 0b01110}},
    {'4', {0b00010, 0b00110, 0b01010, 0b10010, 0b11111, 0b00010, 0b00010}},
    {'5', {0b11111, 0b10000, 0b11110, 0b00001, 0b00001, 0b10001, 0b01110}},
    {'6', {0b00110, 0b01000, 0b10000, 0b11110, 0b10001, 0b10001, 0b01110}},
    {'7', {0b11111, 0b00001, 0b00010, 0b00100, 0b01000, 0b01000, 0b01000}},
    {'8', {0b01110, 0b10001, 0b10001, 0b01110, 0b10001, 0b10001, 0b01110}},
    {'9', {0b01110, 0b10001, 0b10001, 0b01111, 0b00001, 0b00010, 0b01100}},
    {'-', {0b00000, 0b00000, 0b00000, 0b11111, 0b00000, 0b00000, 0b00000}},
    {'.', {0b00000, 0b00000, 0b00000, 0b00000, 0b00000, 0b01100, 0b01100}},
    {'e', {0b00000, 0b00000, 0b01110, 0b10001, 0b11111, 0b10000, 0b01110}},
    {'+', {0b00000, 0b00100, 0b00100, 0b11111, 0b00100, 0b00100, 0b00000}},
};

}  // namespace

GlyphSet::GlyphSet() {
    for (const GlyphDef& g : kGlyphs) {
        rows_[static_cast<unsigned char>(g.c)] = g.rows;
        present_[static_cast<unsigned char>(g.c)] = true;
    }
}

const GlyphSet& GlyphSet::builtin() {
    static const GlyphSet set;
    return set;
}

bool GlyphSet::has(char c) const {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 128 && present_[u];
}

const std::array<uint8_t, GlyphSet::kRows>& GlyphSet::rows(char c) const {
    if (!has(c)) throw config_error(std::string("glyph set has no character '") + c + "'");
    return rows_[static_cast<unsigned char>(c)];
}

std::string GlyphSet::charset() const {
    std::string out;
    for (const GlyphDef& g : kGlyphs) out.push_back(g.c);
    return out;
}

Image GlyphSet::glyph_tile(char c, int scale) const {
    const auto& r = rows(c);
    Image tile(kCols * scale, kRows * scale, 0);
    for (int row = 0; row < kRows; ++row)
        for (int col = 0; col < kCols; ++col)
            if (r[row] & (1 << (kCols - 1 - col)))
                for (int dy = 0; dy < scale; ++dy)
                    for (int dx = 0; dx < scale; ++dx)
                        tile.at(col * scale + dx, row * scale + dy) = 255;
    return tile;
}

void GlyphSet::ink_columns(char c, int& first, int& last) const {
    const auto& r = rows(c);
    first = kCols;
    last = -1;
    for (int col = 0; col < kCols; ++col) {
        for (int row = 0; row < kRows; ++row) {
            if (r[row] & (1 << (kCols - 1 - col))) {
                first = std::min(first, col);
                last = std::max(last, col);
                break;
            }
        }
    }
}

int text_tile_width(size_t n_chars, int scale) {
    if (n_chars == 0) return 0;
    return static_cast<int>(6 * n_chars - 1) * scale;
}

int text_tile_height(int scale) { return GlyphSet::kRows * scale; }

Image render_text_tile(const std::string& text, int scale, const GlyphSet& glyphs) {
    if (text.empty() || scale < 1) throw config_error("cannot render empty label");
    Image tile(text_tile_width(text.size(), scale), text_tile_height(scale), 0);
    int x = 0;
    for (char c : text) {
        Image g = glyphs.glyph_tile(c, scale);
        blit_mask(tile, g, x, 0, 255);
        x += (GlyphSet::kCols + 1) * scale;
    }
    return tile;
}

}  // namespace chartex
