/*
 Copyright 2026 The cumulants authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace cumulants::detail {

// String-keyed memo table. Insertion is idempotent: the first value stored for a
// key wins, so racing writers that computed the same value are harmless.
template <class Value>
class SharedCache {
public:
    bool find(const std::string& key, Value& out) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const std::string& key, const Value& value) {
        std::unique_lock lock(mutex_);
        map_.try_emplace(key, value);
    }
    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }
    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Value> map_;
};

}  // namespace cumulants::detail
