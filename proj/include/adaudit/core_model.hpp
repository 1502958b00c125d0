#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adaudit/errors.hpp"

namespace adaudit {

// Canonical document type for the line-delimited fixture format, model files,
// rules files and reports. Ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// All timestamps are UTC with second resolution.
using UtcTime = std::chrono::sys_seconds;

// Marketing classes with regulated targeting plus the catch-all buckets.
// Enumerator order is alphabetical and doubles as the deterministic
// tie-break order wherever a single class must be chosen.
enum class AdClass : int { Credit = 0, Employment, Housing, Other, Political };

inline constexpr std::size_t kAdClassCount = 5;
inline constexpr std::array<AdClass, kAdClassCount> kAdClasses = {
    AdClass::Credit, AdClass::Employment, AdClass::Housing, AdClass::Other,
    AdClass::Political};

std::string_view to_string(AdClass c);
AdClass ad_class_from_string(std::string_view s);

// Credit sub-types. OtherCredit is the fallback when no sub-class rule fires.
enum class CreditSubclass : int {
    StudentLoan = 0,
    DebtRelief,
    AutoLoan,
    HomeLoanOrMortgage,
    OtherCredit
};

inline constexpr std::size_t kCreditSubclassCount = 5;
inline constexpr std::array<CreditSubclass, kCreditSubclassCount> kCreditSubclasses = {
    CreditSubclass::StudentLoan, CreditSubclass::DebtRelief, CreditSubclass::AutoLoan,
    CreditSubclass::HomeLoanOrMortgage, CreditSubclass::OtherCredit};

std::string_view to_string(CreditSubclass s);
CreditSubclass credit_subclass_from_string(std::string_view s);

// Unknown covers the platform's "custom"/undisclosed gender category.
// Enumerator order is the tie-break order for skew assignment.
enum class Gender : int { Male = 0, Female, Unknown };

inline constexpr std::size_t kGenderCount = 3;
inline constexpr std::array<Gender, kGenderCount> kGenders = {
    Gender::Male, Gender::Female, Gender::Unknown};

std::string_view to_string(Gender g);
// Any string other than "male"/"female" (case-insensitive) maps to Unknown.
Gender gender_from_string(std::string_view s);

// The seven reporting buckets. Values outside this set (e.g. "all") are
// rejected at parse time.
enum class AgeBucket : int {
    Age13_17 = 0,
    Age18_24,
    Age25_34,
    Age35_44,
    Age45_54,
    Age55_64,
    Age65Plus
};

inline constexpr std::size_t kAgeBucketCount = 7;
inline constexpr std::array<AgeBucket, kAgeBucketCount> kAgeBuckets = {
    AgeBucket::Age13_17, AgeBucket::Age18_24, AgeBucket::Age25_34, AgeBucket::Age35_44,
    AgeBucket::Age45_54, AgeBucket::Age55_64, AgeBucket::Age65Plus};

std::string_view to_string(AgeBucket b);
AgeBucket age_bucket_from_string(std::string_view s);

// One (age, gender) cell of an ad's impression distribution.
struct DemographicShare {
    AgeBucket age = AgeBucket::Age13_17;
    Gender gender = Gender::Male;
    double fraction = 0.0;  // share of the ad's impressions, in [0, 1]

    bool operator==(const DemographicShare&) const = default;
};

struct RegionShare {
    std::string region;  // U.S. state name
    double fraction = 0.0;

    bool operator==(const RegionShare&) const = default;
};

// Closed or half-open integer range, e.g. reported impression bounds.
struct CountRange {
    std::uint64_t lower = 0;
    std::optional<std::uint64_t> upper;

    bool operator==(const CountRange&) const = default;
};

// Spend bounds in currency minor units.
struct MoneyRange {
    std::uint64_t lower = 0;
    std::optional<std::uint64_t> upper;
    std::string currency;  // ISO-4217, mirrors AdRecord::currency

    bool operator==(const MoneyRange&) const = default;
};

// One ad campaign as retrieved from the archive, one per fixture line.
struct AdRecord {
    std::string archive_id;  // nonempty, unique key
    UtcTime creation_time{};
    std::string body_text;
    std::optional<std::string> url_caption;
    std::optional<std::string> url_description;
    std::optional<std::string> url_title;
    UtcTime delivery_start{};
    std::optional<UtcTime> delivery_stop;  // >= delivery_start when present
    std::optional<std::string> embedded_url;
    std::string currency;
    std::optional<std::string> funding_entity;
    CountRange impressions;
    std::optional<CountRange> potential_reach;
    std::string page_id;
    std::string page_name;
    std::set<std::string> publisher_platforms;
    std::vector<RegionShare> region_distribution;
    std::vector<DemographicShare> demographic_distribution;
    MoneyRange spend;

    bool operator==(const AdRecord&) const = default;
};

// One entry of the crawl's request log.
struct QueryLogEntry {
    std::string search_term_or_page;  // nonempty
    UtcTime requested_at{};
    std::size_t record_count = 0;
};

// ---- parsing helpers --------------------------------------------------------

// Accepts ISO-8601 timestamps with an explicit offset ("Z", "+HH:MM", "+HHMM"
// or "+HH"); anything without an offset is rejected. `field` names the source
// field for error messages.
UtcTime parse_timestamp(std::string_view s, std::string_view field);

// Renders as "YYYY-MM-DDTHH:MM:SS+0000".
std::string format_timestamp(UtcTime t);

// Fractions arrive as decimal strings; JSON numbers are also accepted.
double parse_fraction(const Json& v, const std::string& field);

// Shortest decimal string that round-trips the double exactly.
std::string format_fraction(double f);

// ---- operations ---------------------------------------------------------------

// Parses one decoded fixture/wire document into a validated AdRecord.
// archiveID, ad_creation_time and ad_delivery_start_time are required;
// other scalar fields default to empty values when missing so that partial
// archive records remain ingestible. Unknown keys are ignored.
//
// Throws MissingFieldError, InvalidValueError or InvariantViolationError.
AdRecord parse_ad_record(const Json& raw);

// Inverse of parse_ad_record; absent optional fields are omitted from the
// output. parse_ad_record(export_ad_record(r)) == r for every valid record.
Json export_ad_record(const AdRecord& record);

// Expands a distribution to all 21 (age, gender) cells, sorted by
// (age, gender); supplied fractions are preserved exactly, absent cells get
// fraction 0. Throws DuplicateCellError when an (age, gender) pair repeats.
std::vector<DemographicShare> normalize_demographics(
    const std::vector<DemographicShare>& shares);

}  // namespace adaudit
