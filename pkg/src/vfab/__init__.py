"""vfab: run Verilog-subset programs as interruptible state machines.

The pipeline is: parse -> elaborate -> transform -> execute.  Programs can
run under the reference event-driven interpreter or be lowered to a core
state machine driven one simulated device cycle at a time, which supports
mid-tick traps for system tasks, checkpoint/restore, live migration, and
multi-tenant execution behind a networked hypervisor.
"""

__version__ = "0.1.0"
