#include "ccx/busemann.hpp"

namespace ccx::busemann {

template class Engine<FareyBusemann>;
template class Engine<TreeBusemann>;

} // namespace ccx::busemann
