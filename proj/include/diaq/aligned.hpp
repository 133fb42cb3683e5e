// Copyright 2026 The DiaQ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Aligned allocation for planar value arrays.
 */
#pragma once

#include <cstddef>
#include <new>
#include <vector>

#include "config.hpp"

namespace diaq {

/// Stateful allocator carrying its alignment. The alignment is captured
/// from default_alignment() at construction time.
template <class T> class AlignedAllocator {
  public:
    using value_type = T;
    using propagate_on_container_copy_assignment = std::true_type;
    using propagate_on_container_move_assignment = std::true_type;
    using propagate_on_container_swap = std::true_type;

    AlignedAllocator() noexcept : alignment_(default_alignment()) {}
    explicit AlignedAllocator(std::size_t alignment) noexcept
        : alignment_(alignment < alignof(T) ? alignof(T) : alignment) {}
    template <class U>
    AlignedAllocator(const AlignedAllocator<U> &other) noexcept
        : alignment_(other.alignment()) {}

    [[nodiscard]] T *allocate(std::size_t n) {
        return static_cast<T *>(
            ::operator new(n * sizeof(T), std::align_val_t{alignment_}));
    }
    void deallocate(T *p, std::size_t /*n*/) noexcept {
        ::operator delete(p, std::align_val_t{alignment_});
    }

    [[nodiscard]] std::size_t alignment() const noexcept { return alignment_; }

    template <class U>
    friend bool operator==(const AlignedAllocator &a,
                           const AlignedAllocator<U> &b) noexcept {
        return a.alignment() == b.alignment();
    }

  private:
    std::size_t alignment_;
};

template <class T> using AlignedVector = std::vector<T, AlignedAllocator<T>>;

} // namespace diaq
