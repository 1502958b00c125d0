#include "adaudit/core_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace adaudit {
namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

const std::array<std::string_view, kAdClassCount> kAdClassNames = {
    "credit", "employment", "housing", "other", "political"};

const std::array<std::string_view, kCreditSubclassCount> kSubclassNames = {
    "student_loan", "debt_relief", "auto_loan", "home_loan_or_mortgage",
    "other_credit"};

const std::array<std::string_view, kGenderCount> kGenderNames = {"male", "female",
                                                                 "unknown"};

const std::array<std::string_view, kAgeBucketCount> kAgeNames = {
    "13-17", "18-24", "25-34", "35-44", "45-54", "55-64", "65+"};

}  // namespace

std::string_view to_string(AdClass c) { return kAdClassNames[static_cast<int>(c)]; }

AdClass ad_class_from_string(std::string_view s) {
    const std::string low = lower_ascii(s);
    for (std::size_t i = 0; i < kAdClassCount; ++i) {
        if (low == kAdClassNames[i]) return kAdClasses[i];
    }
    throw InvalidValueError("class", "unknown class name: " + std::string(s));
}

std::string_view to_string(CreditSubclass s) {
    return kSubclassNames[static_cast<int>(s)];
}

CreditSubclass credit_subclass_from_string(std::string_view s) {
    const std::string low = lower_ascii(s);
    for (std::size_t i = 0; i < kCreditSubclassCount; ++i) {
        if (low == kSubclassNames[i]) return kCreditSubclasses[i];
    }
    throw InvalidValueError("subclass", "unknown sub-class name: " + std::string(s));
}

std::string_view to_string(Gender g) { return kGenderNames[static_cast<int>(g)]; }

Gender gender_from_string(std::string_view s) {
    const std::string low = lower_ascii(s);
    if (low == "male") return Gender::Male;
    if (low == "female") return Gender::Female;
    return Gender::Unknown;
}

std::string_view to_string(AgeBucket b) { return kAgeNames[static_cast<int>(b)]; }

AgeBucket age_bucket_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kAgeBucketCount; ++i) {
        if (s == kAgeNames[i]) return kAgeBuckets[i];
    }
    throw InvalidValueError("age", "not a reporting age bucket: " + std::string(s));
}

// ---- timestamps ---------------------------------------------------------------

namespace {

bool parse_digits(std::string_view s, std::size_t& pos, int width, int& out) {
    if (pos + width > s.size()) return false;
    int value = 0;
    for (int i = 0; i < width; ++i) {
        const char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + (c - '0');
    }
    pos += width;
    out = value;
    return true;
}

}  // namespace

UtcTime parse_timestamp(std::string_view s, std::string_view field) {
    const std::string name(field);
    auto fail = [&](const char* why) -> InvalidValueError {
        return InvalidValueError(name, std::string(why) + ": \"" + std::string(s) + "\"");
    };

    std::size_t pos = 0;
    int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
    if (!parse_digits(s, pos, 4, year) || pos >= s.size() || s[pos] != '-')
        throw fail("malformed date");
    ++pos;
    if (!parse_digits(s, pos, 2, month) || pos >= s.size() || s[pos] != '-')
        throw fail("malformed date");
    ++pos;
    if (!parse_digits(s, pos, 2, day)) throw fail("malformed date");
    if (pos >= s.size() || (s[pos] != 'T' && s[pos] != ' ')) throw fail("missing time");
    ++pos;
    if (!parse_digits(s, pos, 2, hour) || pos >= s.size() || s[pos] != ':')
        throw fail("malformed time");
    ++pos;
    if (!parse_digits(s, pos, 2, minute) || pos >= s.size() || s[pos] != ':')
        throw fail("malformed time");
    ++pos;
    if (!parse_digits(s, pos, 2, second)) throw fail("malformed time");

    // Fractional seconds are accepted and truncated.
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) throw fail("malformed fractional seconds");
    }

    if (pos >= s.size()) throw fail("missing UTC offset");
    int offset_minutes = 0;
    const char c = s[pos];
    if (c == 'Z' || c == 'z') {
        ++pos;
    } else if (c == '+' || c == '-') {
        const int sign = (c == '+') ? 1 : -1;
        ++pos;
        int oh = 0, om = 0;
        if (!parse_digits(s, pos, 2, oh)) throw fail("malformed UTC offset");
        if (pos < s.size() && s[pos] == ':') {
            ++pos;
            if (!parse_digits(s, pos, 2, om)) throw fail("malformed UTC offset");
        } else if (pos + 2 <= s.size() && s[pos] >= '0' && s[pos] <= '9') {
            if (!parse_digits(s, pos, 2, om)) throw fail("malformed UTC offset");
        }
        if (oh > 23 || om > 59) throw fail("UTC offset out of range");
        offset_minutes = sign * (oh * 60 + om);
    } else {
        throw fail("missing UTC offset");
    }
    if (pos != s.size()) throw fail("trailing characters");

    namespace chr = std::chrono;
    const chr::year_month_day ymd{chr::year{year}, chr::month{unsigned(month)},
                                  chr::day{unsigned(day)}};
    if (!ymd.ok()) throw fail("no such calendar date");
    if (hour > 23 || minute > 59 || second > 59) throw fail("time of day out of range");

    const auto day_point = static_cast<chr::sys_days>(ymd);
    return chr::time_point_cast<chr::seconds>(day_point) + chr::hours{hour} +
           chr::minutes{minute} - chr::minutes{offset_minutes} + chr::seconds{second};
}

std::string format_timestamp(UtcTime t) {
    namespace chr = std::chrono;
    const auto days = chr::floor<chr::days>(t);
    const chr::year_month_day ymd{days};
    const chr::hh_mm_ss<chr::seconds> tod{t - days};
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02ld:%02ld:%02ld+0000",
                  int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
                  long(tod.hours().count()), long(tod.minutes().count()),
                  long(tod.seconds().count()));
    return buf;
}

// ---- fractions -------------------------------------------------------------------

double parse_fraction(const Json& v, const std::string& field) {
    double value = 0.0;
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const char* first = s.data();
        const char* last = s.data() + s.size();
        const auto res = std::from_chars(first, last, value);
        if (res.ec != std::errc{} || res.ptr != last)
            throw InvalidValueError(field, "not a decimal number: \"" + s + "\"");
    } else if (v.is_number()) {
        value = v.get<double>();
    } else {
        throw InvalidValueError(field, "expected a decimal string");
    }
    if (!std::isfinite(value))
        throw InvalidValueError(field, "not a finite number");
    if (value < 0.0 || value > 1.0)
        throw InvariantViolationError(field + ": fraction " + format_fraction(value) +
                                      " outside [0, 1]");
    return value;
}

std::string format_fraction(double f) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), f);
    return std::string(buf, res.ptr);
}

// ---- record parsing ----------------------------------------------------------------

namespace {

bool has_value(const Json& doc, const char* key) {
    const auto it = doc.find(key);
    return it != doc.end() && !it->is_null();
}

std::string require_string(const Json& doc, const char* key) {
    if (!has_value(doc, key)) throw MissingFieldError(key);
    const Json& v = doc.at(key);
    if (!v.is_string()) throw InvalidValueError(key, "expected a string");
    return v.get<std::string>();
}

std::string string_or_empty(const Json& doc, const char* key) {
    if (!has_value(doc, key)) return {};
    const Json& v = doc.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    throw InvalidValueError(key, "expected a string");
}

std::optional<std::string> optional_string(const Json& doc, const char* key) {
    if (!has_value(doc, key)) return std::nullopt;
    const Json& v = doc.at(key);
    if (!v.is_string()) throw InvalidValueError(key, "expected a string");
    return v.get<std::string>();
}

std::uint64_t parse_bound(const Json& v, const std::string& field) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::uint64_t value = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw InvalidValueError(field, "not a non-negative integer: \"" + s + "\"");
        return value;
    }
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
        const auto i = v.get<std::int64_t>();
        if (i < 0) throw InvalidValueError(field, "negative bound");
        return static_cast<std::uint64_t>(i);
    }
    throw InvalidValueError(field, "expected an integer or digit string");
}

CountRange parse_count_range(const Json& doc, const std::string& field) {
    if (!doc.is_object()) throw InvalidValueError(field, "expected an object");
    CountRange range;
    if (!has_value(doc, "lower_bound")) throw MissingFieldError(field + ".lower_bound");
    range.lower = parse_bound(doc.at("lower_bound"), field + ".lower_bound");
    if (has_value(doc, "upper_bound")) {
        range.upper = parse_bound(doc.at("upper_bound"), field + ".upper_bound");
        if (*range.upper < range.lower)
            throw InvariantViolationError(field + ": upper_bound below lower_bound");
    }
    return range;
}

}  // namespace

AdRecord parse_ad_record(const Json& raw) {
    if (!raw.is_object())
        throw InvalidValueError("record", "expected a key-value document");

    AdRecord rec;
    rec.archive_id = require_string(raw, "archiveID");
    if (rec.archive_id.empty())
        throw InvariantViolationError("archiveID must be nonempty");

    if (!has_value(raw, "ad_creation_time")) throw MissingFieldError("ad_creation_time");
    rec.creation_time =
        parse_timestamp(raw.at("ad_creation_time").get<std::string>(), "ad_creation_time");

    rec.body_text = string_or_empty(raw, "text");
    rec.url_caption = optional_string(raw, "url_caption");
    rec.url_description = optional_string(raw, "url_description");
    rec.url_title = optional_string(raw, "url_title");

    if (!has_value(raw, "ad_delivery_start_time"))
        throw MissingFieldError("ad_delivery_start_time");
    rec.delivery_start = parse_timestamp(raw.at("ad_delivery_start_time").get<std::string>(),
                                         "ad_delivery_start_time");
    if (has_value(raw, "ad_delivery_stop_time")) {
        rec.delivery_stop = parse_timestamp(raw.at("ad_delivery_stop_time").get<std::string>(),
                                            "ad_delivery_stop_time");
        if (*rec.delivery_stop < rec.delivery_start)
            throw InvariantViolationError("ad_delivery_stop_time precedes start: " +
                                          rec.archive_id);
    }

    rec.embedded_url = optional_string(raw, "embedded_url");
    rec.currency = string_or_empty(raw, "currency");
    rec.funding_entity = optional_string(raw, "funding_entity");

    if (has_value(raw, "impressions"))
        rec.impressions = parse_count_range(raw.at("impressions"), "impressions");
    if (has_value(raw, "potential_reach"))
        rec.potential_reach = parse_count_range(raw.at("potential_reach"), "potential_reach");

    rec.page_id = string_or_empty(raw, "page_id");
    rec.page_name = string_or_empty(raw, "page_name");

    if (has_value(raw, "publisher_platforms")) {
        const Json& plats = raw.at("publisher_platforms");
        if (!plats.is_array())
            throw InvalidValueError("publisher_platforms", "expected an array");
        for (const Json& p : plats) {
            if (!p.is_string())
                throw InvalidValueError("publisher_platforms", "expected strings");
            rec.publisher_platforms.insert(p.get<std::string>());
        }
    }

    if (has_value(raw, "region_distribution")) {
        const Json& regions = raw.at("region_distribution");
        if (!regions.is_array())
            throw InvalidValueError("region_distribution", "expected an array");
        for (const Json& cell : regions) {
            RegionShare share;
            share.region = require_string(cell, "region");
            if (!has_value(cell, "percentage"))
                throw MissingFieldError("region_distribution.percentage");
            share.fraction =
                parse_fraction(cell.at("percentage"), "region_distribution.percentage");
            rec.region_distribution.push_back(std::move(share));
        }
    }

    if (has_value(raw, "demographic_distribution")) {
        const Json& cells = raw.at("demographic_distribution");
        if (!cells.is_array())
            throw InvalidValueError("demographic_distribution", "expected an array");
        double sum = 0.0;
        std::array<bool, kAgeBucketCount * kGenderCount> seen{};
        for (const Json& cell : cells) {
            DemographicShare share;
            share.age = age_bucket_from_string(require_string(cell, "age"));
            share.gender = gender_from_string(require_string(cell, "gender"));
            if (!has_value(cell, "percentage"))
                throw MissingFieldError("demographic_distribution.percentage");
            share.fraction =
                parse_fraction(cell.at("percentage"), "demographic_distribution.percentage");
            const std::size_t slot = static_cast<std::size_t>(share.age) * kGenderCount +
                                     static_cast<std::size_t>(share.gender);
            if (seen[slot])
                throw InvariantViolationError(
                    "demographic_distribution repeats cell (" +
                    std::string(to_string(share.age)) + ", " +
                    std::string(to_string(share.gender)) + ")");
            seen[slot] = true;
            sum += share.fraction;
            rec.demographic_distribution.push_back(share);
        }
        if (sum > 1.01)
            throw InvariantViolationError("demographic fractions sum to " +
                                          format_fraction(sum) + " (> 1.01)");
    }

    if (has_value(raw, "spend")) {
        const CountRange r = parse_count_range(raw.at("spend"), "spend");
        rec.spend.lower = r.lower;
        rec.spend.upper = r.upper;
    }
    rec.spend.currency = rec.currency;

    return rec;
}

Json export_ad_record(const AdRecord& record) {
    Json doc = Json::object();
    doc["archiveID"] = record.archive_id;
    doc["ad_creation_time"] = format_timestamp(record.creation_time);
    doc["text"] = record.body_text;
    if (record.url_caption) doc["url_caption"] = *record.url_caption;
    if (record.url_description) doc["url_description"] = *record.url_description;
    if (record.url_title) doc["url_title"] = *record.url_title;
    doc["ad_delivery_start_time"] = format_timestamp(record.delivery_start);
    if (record.delivery_stop)
        doc["ad_delivery_stop_time"] = format_timestamp(*record.delivery_stop);
    if (record.embedded_url) doc["embedded_url"] = *record.embedded_url;
    doc["currency"] = record.currency;
    if (record.funding_entity) doc["funding_entity"] = *record.funding_entity;

    Json impressions = Json::object();
    impressions["lower_bound"] = record.impressions.lower;
    if (record.impressions.upper) impressions["upper_bound"] = *record.impressions.upper;
    doc["impressions"] = std::move(impressions);

    if (record.potential_reach) {
        Json reach = Json::object();
        reach["lower_bound"] = record.potential_reach->lower;
        if (record.potential_reach->upper)
            reach["upper_bound"] = *record.potential_reach->upper;
        doc["potential_reach"] = std::move(reach);
    }

    doc["page_id"] = record.page_id;
    doc["page_name"] = record.page_name;

    Json platforms = Json::array();
    for (const std::string& p : record.publisher_platforms) platforms.push_back(p);
    doc["publisher_platforms"] = std::move(platforms);

    Json regions = Json::array();
    for (const RegionShare& share : record.region_distribution) {
        Json cell = Json::object();
        cell["region"] = share.region;
        cell["percentage"] = format_fraction(share.fraction);
        regions.push_back(std::move(cell));
    }
    doc["region_distribution"] = std::move(regions);

    Json cells = Json::array();
    for (const DemographicShare& share : record.demographic_distribution) {
        Json cell = Json::object();
        cell["age"] = std::string(to_string(share.age));
        cell["gender"] = std::string(to_string(share.gender));
        cell["percentage"] = format_fraction(share.fraction);
        cells.push_back(std::move(cell));
    }
    doc["demographic_distribution"] = std::move(cells);

    Json spend = Json::object();
    spend["lower_bound"] = record.spend.lower;
    if (record.spend.upper) spend["upper_bound"] = *record.spend.upper;
    doc["spend"] = std::move(spend);

    return doc;
}

std::vector<DemographicShare> normalize_demographics(
    const std::vector<DemographicShare>& shares) {
    std::array<std::optional<double>, kAgeBucketCount * kGenderCount> grid;
    for (const DemographicShare& share : shares) {
        const std::size_t slot = static_cast<std::size_t>(share.age) * kGenderCount +
                                 static_cast<std::size_t>(share.gender);
        if (grid[slot])
            throw DuplicateCellError("duplicate demographic cell (" +
                                     std::string(to_string(share.age)) + ", " +
                                     std::string(to_string(share.gender)) + ")");
        grid[slot] = share.fraction;
    }

    std::vector<DemographicShare> cells;
    cells.reserve(kAgeBucketCount * kGenderCount);
    for (AgeBucket age : kAgeBuckets) {
        for (Gender gender : kGenders) {
            const std::size_t slot = static_cast<std::size_t>(age) * kGenderCount +
                                     static_cast<std::size_t>(gender);
            cells.push_back({age, gender, grid[slot].value_or(0.0)});
        }
    }
    return cells;
}

}  // namespace adaudit
