#include "adaudit/textproc.hpp"

#include <cstdint>

namespace adaudit {
namespace {

// Decodes one UTF-8 sequence starting at s[i]; advances i past it. Returns
// 0xFFFFFFFF for malformed bytes (which then classify as separators).
std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    std::uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFFFFFF;
    }
    if (i + len > s.size()) {
        ++i;
        return 0xFFFFFFFF;
    }
    for (int k = 1; k < len; ++k) {
        const unsigned char bk = byte(i + k);
        if ((bk & 0xC0) != 0x80) {
            ++i;
            return 0xFFFFFFFF;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += len;
    return cp;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_word_codepoint(std::uint32_t cp) {
    if (cp < 0x80)
        return (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') ||
               (cp >= 'a' && cp <= 'z');
    if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;  // Latin-1 letters
    if (cp >= 0x100 && cp <= 0x24F) return true;   // Latin Extended-A/B
    if (cp >= 0x370 && cp <= 0x3FF) return cp != 0x374 && cp != 0x375 && cp != 0x37E;
    if (cp >= 0x400 && cp <= 0x4FF) return true;   // Cyrillic
    if (cp >= 0x590 && cp <= 0x5FF) return cp >= 0x5D0;  // Hebrew letters
    if (cp >= 0x620 && cp <= 0x64A) return true;   // Arabic letters
    if (cp >= 0x660 && cp <= 0x669) return true;   // Arabic-Indic digits
    if (cp >= 0x3040 && cp <= 0x30FF) return cp != 0x3097 && cp != 0x3098;  // kana
    if (cp >= 0x4E00 && cp <= 0x9FFF) return true;  // CJK unified
    if (cp >= 0xAC00 && cp <= 0xD7AF) return true;  // Hangul syllables
    return false;
}

std::uint32_t lower_codepoint(std::uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
    if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x178) return 0xFF;
    if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;  // Greek
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;                 // Cyrillic
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        const std::uint32_t cp = decode_utf8(text, i);
        if (cp != 0xFFFFFFFF && is_word_codepoint(cp)) {
            append_utf8(current, lower_codepoint(cp));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

BagOfWords vectorize(const std::vector<std::string>& tokens) {
    BagOfWords counts;
    for (const std::string& token : tokens) ++counts[token];
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i)
        ++counts[tokens[i] + ' ' + tokens[i + 1]];
    return counts;
}

bool contains_phrase(std::span<const std::string> tokens,
                     std::span<const std::string> phrase) {
    if (phrase.empty() || phrase.size() > tokens.size()) return false;
    for (std::size_t i = 0; i + phrase.size() <= tokens.size(); ++i) {
        bool match = true;
        for (std::size_t k = 0; k < phrase.size(); ++k) {
            if (tokens[i + k] != phrase[k]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

}  // namespace adaudit
