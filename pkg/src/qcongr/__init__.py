"""Power series engine and congruence harness for tagged parts over partitions with designated summands."""

__version__ = "0.1.0"
