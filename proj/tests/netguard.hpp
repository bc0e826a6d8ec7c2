/*
 * Copyright 2026 The credmem Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Counts socket(2) and connect(2) calls made from statically linked code.
// Binaries using this must link with -Wl,--wrap=socket -Wl,--wrap=connect.

#pragma once

#include <sys/socket.h>

#include <atomic>

namespace credmem::netguard {

std::atomic<int>& socket_calls();
std::atomic<int>& connect_calls();

inline int total() { return socket_calls().load() + connect_calls().load(); }

}  // namespace credmem::netguard
