#include "minifab/lots.hpp"

#include <charconv>

namespace minifab {

namespace {

void append_number(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

} // namespace

std::string_view lot_type_name(LotType type) {
    switch (type) {
    case LotType::Pa: return "Pa";
    case LotType::Pb: return "Pb";
    default: return "Tw";
    }
}

std::string LotMessage::text() const {
    std::string out = "lot id=";
    out += std::to_string(lot.id);
    out += " type=";
    out += lot_type_name(lot.type);
    out += " created=";
    append_number(out, lot.created_at);
    return out;
}

std::string BatchMessage::text() const {
    std::string out = "batch step=";
    out += std::to_string(batch.step);
    out += " lots=";
    for (std::size_t i = 0; i < batch.lots.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(batch.lots[i].id);
    }
    return out;
}

} // namespace minifab
