#include "statel/symbols.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace statel {

namespace {

struct Registry {
    std::mutex mutex;
    std::deque<std::string> texts;  // stable addresses
    std::unordered_map<std::string_view, std::uint32_t> ids;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

Symbol Symbol::intern(std::string_view text) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mutex);
    auto it = r.ids.find(text);
    if (it != r.ids.end()) return Symbol(it->second);
    auto id = static_cast<std::uint32_t>(r.texts.size());
    r.texts.emplace_back(text);
    r.ids.emplace(std::string_view(r.texts.back()), id);
    return Symbol(id);
}

const std::string& Symbol::text() const {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mutex);
    return r.texts[id_];
}

}  // namespace statel
