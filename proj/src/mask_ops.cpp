#include "symdet/mask_ops.hpp"

#include <utility>
#include <vector>

namespace symdet {

BinaryMask erode3(const BinaryMask& m) {
    BinaryMask out(m.width, m.height);
    for (int y = 1; y + 1 < m.height; ++y)
        for (int x = 1; x + 1 < m.width; ++x) {
            bool all = true;
            for (int dy = -1; dy <= 1 && all; ++dy)
                for (int dx = -1; dx <= 1 && all; ++dx)
                    if (!m.get(x + dx, y + dy)) all = false;
            if (all) out.set(x, y, true);
        }
    return out;
}

BinaryMask dilate3(const BinaryMask& m) {
    BinaryMask out(m.width, m.height);
    for (int y = 0; y < m.height; ++y)
        for (int x = 0; x < m.width; ++x) {
            if (!m.get(x, y)) continue;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx)
                    if (m.in_bounds(x + dx, y + dy)) out.set(x + dx, y + dy, true);
        }
    return out;
}

BinaryMask open3(const BinaryMask& m) { return dilate3(erode3(m)); }

std::vector<std::vector<Pixel>> label_components(const BinaryMask& m, int connectivity) {
    std::vector<char> seen(m.bits.size(), 0);
    std::vector<std::vector<Pixel>> comps;
    std::vector<Pixel> queue;
    for (int sy = 0; sy < m.height; ++sy)
        for (int sx = 0; sx < m.width; ++sx) {
            std::size_t si = static_cast<std::size_t>(sy) * m.width + sx;
            if (!m.bits[si] || seen[si]) continue;
            std::vector<Pixel> comp;
            queue.clear();
            queue.push_back({sx, sy});
            seen[si] = 1;
            std::size_t head = 0;
            while (head < queue.size()) {
                Pixel p = queue[head++];
                comp.push_back(p);
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        if (connectivity == 4 && dx != 0 && dy != 0) continue;
                        int nx = p.x + dx, ny = p.y + dy;
                        if (!m.in_bounds(nx, ny)) continue;
                        std::size_t ni = static_cast<std::size_t>(ny) * m.width + nx;
                        if (m.bits[ni] && !seen[ni]) {
                            seen[ni] = 1;
                            queue.push_back({nx, ny});
                        }
                    }
            }
            comps.push_back(std::move(comp));
        }
    return comps;
}

BinaryMask fill_holes(const BinaryMask& m) {
    BinaryMask background(m.width, m.height);
    for (std::size_t i = 0; i < m.bits.size(); ++i) background.bits[i] = m.bits[i] ? 0 : 1;
    BinaryMask out = m;
    for (const auto& comp : label_components(background, 4)) {
        bool touches_border = false;
        for (const Pixel& p : comp)
            if (p.x == 0 || p.y == 0 || p.x == m.width - 1 || p.y == m.height - 1) {
                touches_border = true;
                break;
            }
        if (!touches_border)
            for (const Pixel& p : comp) out.set(p.x, p.y, true);
    }
    return out;
}

} // namespace symdet
