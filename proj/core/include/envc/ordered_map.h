// Copyright 2026 The envc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENVC_ORDERED_MAP_H_
#define ENVC_ORDERED_MAP_H_

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace envc {

// Applies `fn` to every item pulled from `source` on `workers` threads and
// hands the results to `sink` in source order, on the calling thread.
//
// The source is only ever called by one thread at a time. At most
// `window` items are in flight (pulled but not yet sunk), which bounds memory
// when one slow item holds up the reorder buffer.
template <typename In, typename Out>
void OrderedParallelMap(const std::function<std::optional<In>()>& source,
                        const std::function<Out(const In&)>& fn,
                        const std::function<void(Out&&)>& sink, int workers, size_t window = 0) {
  if (workers <= 1) {
    while (auto item = source()) sink(fn(*item));
    return;
  }
  if (window == 0) window = static_cast<size_t>(workers) * 8;

  std::mutex mu;
  std::condition_variable can_pull;  // window has room
  std::condition_variable ready;     // a result arrived or input ended
  size_t next_pull = 0;              // sequence number of the next pulled item
  size_t next_emit = 0;              // sequence number the sink expects
  bool exhausted = false;
  size_t running = static_cast<size_t>(workers);
  std::map<size_t, Out> done;

  auto work = [&] {
    while (true) {
      std::optional<In> item;
      size_t seq;
      {
        std::unique_lock<std::mutex> lock(mu);
        can_pull.wait(lock, [&] { return exhausted || next_pull - next_emit < window; });
        if (exhausted) break;
        item = source();
        if (!item) {
          exhausted = true;
          can_pull.notify_all();
          break;
        }
        seq = next_pull++;
      }
      Out out = fn(*item);
      {
        std::lock_guard<std::mutex> lock(mu);
        done.emplace(seq, std::move(out));
      }
      ready.notify_one();
    }
    {
      std::lock_guard<std::mutex> lock(mu);
      --running;
    }
    ready.notify_one();
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (int i = 0; i < workers; ++i) threads.emplace_back(work);

  while (true) {
    std::unique_lock<std::mutex> lock(mu);
    ready.wait(lock, [&] { return done.count(next_emit) > 0 || (running == 0 && done.empty()); });
    auto it = done.find(next_emit);
    if (it == done.end()) break;
    Out out = std::move(it->second);
    done.erase(it);
    ++next_emit;
    lock.unlock();
    can_pull.notify_all();
    sink(std::move(out));
  }
  for (auto& t : threads) t.join();
}

}  // namespace envc

#endif  // ENVC_ORDERED_MAP_H_
