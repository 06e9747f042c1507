#include "chartex/render.hpp"

#include "chartex/markers.hpp"

namespace chartex {

namespace {

constexpr uint8_t kInk = 0;
constexpr uint8_t kBackground = 255;

void draw_box(Image& img, const BoundingBox& b, uint8_t v) {
    fill_rect(img, b.x_min, b.y_min, b.x_max, b.y_max, v);
}

}  // namespace

Image render(const GroundTruthChart& chart) {
    const ChartLayout& L = chart.layout;
    Image img(chart.spec.image_width, chart.spec.image_height, kBackground);

    // Grid first so real ink paints over it.
    if (L.grid) {
        for (const TickLayout& t : L.x_ticks) {
            double cx = bbox_center(t.mark_box).x;
            fill_rect(img, cx - 0.5, L.plot_top, cx + 0.5, L.plot_bottom, L.grid_gray);
        }
        for (const TickLayout& t : L.y_ticks) {
            double cy = bbox_center(t.mark_box).y;
            fill_rect(img, L.plot_left, cy - 0.5, L.plot_right, cy + 0.5, L.grid_gray);
        }
    }

    // Axis lines: an L of left and bottom.
    fill_rect(img, L.plot_left, L.plot_top, L.plot_left + L.axis_thickness,
              L.plot_bottom + L.axis_thickness, kInk);
    fill_rect(img, L.plot_left, L.plot_bottom, L.plot_right, L.plot_bottom + L.axis_thickness,
              kInk);

    for (const BoundingBox& b : L.minor_ticks) draw_box(img, b, kInk);
    for (const TickLayout& t : L.x_ticks) draw_box(img, t.mark_box, kInk);
    for (const TickLayout& t : L.y_ticks) draw_box(img, t.mark_box, kInk);

    for (const TickLayout& t : L.x_ticks)
        blit_mask(img, t.label_text.tile, t.label_text.origin_x, t.label_text.origin_y, kInk);
    for (const TickLayout& t : L.y_ticks)
        blit_mask(img, t.label_text.tile, t.label_text.origin_x, t.label_text.origin_y, kInk);
    if (L.title)
        blit_mask(img, L.title->tile, L.title->origin_x, L.title->origin_y, kInk);

    for (const ChartLayout::Marker& mk : L.markers)
        draw_marker(img, chart.spec.marker_style, mk.cx, mk.cy, chart.spec.marker_radius, kInk);

    return img;
}

}  // namespace chartex
