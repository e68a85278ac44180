#include "subiso/core.hpp"

namespace subiso {

Counters& counters() {
    static Counters c;
    return c;
}

}  // namespace subiso
