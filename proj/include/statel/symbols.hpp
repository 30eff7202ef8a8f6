#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace statel {

// Interned concept/role name.  Interning is process-global and append-only,
// so Symbols stay valid for the lifetime of the process and comparisons are
// integer comparisons.  Thread safe.
class Symbol {
public:
    static Symbol intern(std::string_view text);

    const std::string& text() const;
    std::uint32_t id() const { return id_; }

    friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

    // Lexicographic order, for deterministic output independent of
    // interning order.
    static bool text_less(Symbol a, Symbol b) { return a.text() < b.text(); }

private:
    explicit Symbol(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

}  // namespace statel
