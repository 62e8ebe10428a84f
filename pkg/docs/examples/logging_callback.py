from sd_moments import MomentAnalyzer

analyzer = MomentAnalyzer()

def my_logger(message, level):
    print(f"[LOG LEVEL {level}] {message}")

analyzer.register_log_callback(my_logger)
analyzer.enumerate_stabilization_classes(3, 2)
